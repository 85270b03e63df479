#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hodge/hodge_system.hpp"
#include "hodge/profile.hpp"

namespace hodge {

/// Rank chain imposed on candidate subsystems F = F_0 + ... + F_r.
///   PaperMonotone: rk F_i <= rk F_{i-1}.
///   Conservative:  rk F_i <= d * rk F_{i-1}, which is all that
///                  F_i ~ theta(F_i) in F_{i-1} (x) Omega^1 gives directly.
enum class ConstraintMode { PaperMonotone, Conservative };

std::string to_string(ConstraintMode mode);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  ConstraintMode mode = ConstraintMode::PaperMonotone;
  SubsheafMode subsheaf = SubsheafMode::Semistable;
  std::uint64_t budget = kDefaultBudget;
  /// Split the search over the rank of F_0 and run the subtrees
  /// concurrently. The result does not depend on this flag.
  bool parallel = false;
};

/// prod_i (rk E_i + 1), saturating at UINT64_MAX.
std::uint64_t search_space_size(const HodgeSystem& sys);

using ProfileVisitor = std::function<void(std::span<const ProfileEntry>)>;

/// Calls `visit` on every proper admissible profile in lexicographic order:
/// 1 <= rk F_i <= rk E_i, the rank chain of `opts.mode`, and
/// deg F_i = max_subsheaf_degree(rk F_i, E_i, opts.subsheaf). The full
/// system is skipped.
///
/// Throws InvalidInput for a declared-theta system or when a component lacks
/// the flag `opts.subsheaf` needs, and BudgetExceeded when
/// search_space_size exceeds `opts.budget`. Returns the number visited.
std::uint64_t visit_profiles(const HodgeSystem& sys, const SearchOptions& opts,
                             const ProfileVisitor& visit);

std::vector<SubsystemProfile> enumerate_profiles(const HodgeSystem& sys,
                                                 const SearchOptions& opts);

struct MaxSlopeResult {
  SubsystemProfile profile;
  Rational slope;
  std::uint64_t enumerated = 0;
};

/// Maximal-slope enumerated profile; ties go to the lexicographically
/// smallest entry list. Empty when no proper profile exists.
std::optional<MaxSlopeResult> max_slope_profile(const HodgeSystem& sys,
                                                const SearchOptions& opts);

/// Ground-truth verdict over the profile class. Every component must be
/// flagged semistable.
///
/// Semistability uses semistable degree bounds. Stability uses stable
/// bounds when every component is flagged stable, otherwise an equal-slope
/// profile under semistable bounds counts as a witness against stability.
/// `opts.subsheaf` is ignored.
Verdict verdict_from_search(const HodgeSystem& sys,
                            const SearchOptions& opts = {});

/// Compares a caller-declared invariant subobject against mu(E). Ranks must
/// be dominated by the components; degrees are checked against the subsheaf
/// bound of each component whose flags allow it.
Verdict check_declared(const HodgeSystem& sys,
                       const SubsystemProfile& profile);

/// Rank chain of `mode` plus rk F_i <= rk E_i; degrees are not inspected.
bool admissible_ranks(const HodgeSystem& sys, const SubsystemProfile& profile,
                      ConstraintMode mode);

/// Paper-monotone vs conservative maxima against mu(E). A system where only
/// the conservative class finds a violation is a discrepancy.
struct ModeComparison {
  std::optional<MaxSlopeResult> paper;
  std::optional<MaxSlopeResult> conservative;
  Rational mu_total;

  bool paper_violates() const { return paper && paper->slope > mu_total; }
  bool conservative_violates() const {
    return conservative && conservative->slope > mu_total;
  }
  bool discrepancy() const {
    return conservative_violates() && !paper_violates();
  }
};

ModeComparison compare_modes(const HodgeSystem& sys, SubsheafMode subsheaf,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace hodge
