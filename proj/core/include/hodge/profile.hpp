#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

struct ProfileEntry {
  std::int64_t rank;
  std::int64_t degree;

  friend auto operator<=>(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Candidate Higgs-invariant subobject F = F_0 + ... + F_r of a system of
/// Hodge bundles, recorded as (rk F_i, deg F_i) with contiguous support
/// starting at index 0 and strictly positive ranks.
class SubsystemProfile {
 public:
  explicit SubsystemProfile(std::vector<ProfileEntry> entries);

  const std::vector<ProfileEntry>& entries() const { return entries_; }
  std::size_t support_top() const { return entries_.size() - 1; }
  std::size_t size() const { return entries_.size(); }
  const ProfileEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::int64_t total_rank() const;
  std::int64_t total_degree() const;
  Rational slope() const;

  /// rk F_i <= rk F_{i-1} along the support.
  bool rank_nonincreasing() const;

  /// Lexicographic on the entry list; this is the oracle's tie-break order.
  friend auto operator<=>(const SubsystemProfile&,
                          const SubsystemProfile&) = default;

 private:
  std::vector<ProfileEntry> entries_;
};

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t);

struct Certificate {
  SubsystemProfile profile;
  Rational slope;
  Rational mu_total;

  Rational gap() const { return slope - mu_total; }
};

/// Three-valued (semi)stability verdict with an optional destabilizer
/// certificate and a short description of the rule that produced it.
struct Verdict {
  Tri semistable = Tri::Unknown;
  Tri stable = Tri::Unknown;
  std::optional<Certificate> certificate;
  std::string provenance;

  /// stable=Yes requires semistable=Yes; semistable=No forces stable=No;
  /// a certificate attached to semistable=No must have a positive gap, and
  /// one attached to stable=No a non-negative gap.
  void validate() const;
};

}  // namespace hodge
