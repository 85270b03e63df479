#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodge::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kInconsistent = 2,
};

/// Runs one command line (without the program name). Writes exactly one
/// JSON object to `out` and a human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hodge::cli
