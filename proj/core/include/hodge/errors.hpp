#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a value violates a type invariant or an operation's
/// precondition (range, required flag, list shape).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis the caller asked us to rely on does not hold,
/// e.g. deg(Omega^1) < 0 for the semistability criterion.
class HypothesisViolated : public InvalidInput {
 public:
  explicit HypothesisViolated(const std::string& what)
      : InvalidInput("hypothesis violated: " + what) {}
};

/// The brute-force search space exceeds the configured budget.
class BudgetExceeded : public InvalidInput {
 public:
  explicit BudgetExceeded(const std::string& what)
      : InvalidInput("budget exceeded: " + what) {}
};

/// An integer quantity left the 64-bit range.
class Overflow : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Two independent routes disagree. Always a bug.
class Inconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace hodge
