#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "hodge/hn_profiles.hpp"
#include "hodge/hodge_system.hpp"
#include "hodge/json_io.hpp"
#include "hodge/oper.hpp"
#include "hodge/search_oracle.hpp"

namespace hodge::cli {

struct HnRequest {
  HNProfile profile;
  BundleData tensor_with;
};

/// Optional "search" block; command-line flags override it.
struct SearchSettings {
  std::optional<ConstraintMode> mode;
  std::optional<SubsheafMode> subsheaf;
  std::optional<std::uint64_t> budget;
};

/// One input document: exactly one of hodge_system, griffiths_filtration,
/// connection_pair, hn_request, plus optional search settings and optional
/// converse data about E_0 ("e0_data": {"hn": [...],
/// "equal_slope_subsheaf": {...}}).
struct InstanceDocument {
  std::variant<HodgeSystem, GriffithsFiltration, ConnectionPair, HnRequest>
      body;
  SearchSettings search;
  ConverseData e0_data;

  std::string kind() const;
};

InstanceDocument parse_instance(const json::Json& j);

/// Reads `path` ("-" for standard input) and parses it.
InstanceDocument load_instance(const std::string& path);

ConstraintMode parse_constraint_mode(const std::string& s);
SubsheafMode parse_subsheaf_mode(const std::string& s);

}  // namespace hodge::cli
