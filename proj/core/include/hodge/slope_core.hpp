#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Numerical shadow of a torsion-free sheaf: rank, degree against the fixed
/// polarization, and optional semistability/stability attestations.
///
/// Construction normalizes and validates the flags:
///   - stable == true forces semistable == true;
///   - semistable == false forces stable == false;
///   - rank-1 sheaves are stable, so a false flag on one is rejected;
///   - semistable with gcd(rank, degree) == 1 is automatically stable, so an
///     explicit stable == false there is rejected.
class BundleData {
 public:
  BundleData(std::int64_t rank, std::int64_t degree,
             std::optional<bool> semistable = std::nullopt,
             std::optional<bool> stable = std::nullopt);

  static BundleData semistable_bundle(std::int64_t rank, std::int64_t degree) {
    return BundleData(rank, degree, true);
  }
  static BundleData stable_bundle(std::int64_t rank, std::int64_t degree) {
    return BundleData(rank, degree, true, true);
  }

  std::int64_t rank() const { return rank_; }
  std::int64_t degree() const { return degree_; }
  std::optional<bool> semistable() const { return semistable_; }
  std::optional<bool> stable() const { return stable_; }

  bool flagged_semistable() const { return semistable_.value_or(false); }
  bool flagged_stable() const { return stable_.value_or(false); }

  /// Same invariants, flags dropped.
  BundleData numeric() const { return BundleData(rank_, degree_); }

  friend bool operator==(const BundleData&, const BundleData&) = default;

 private:
  std::int64_t rank_;
  std::int64_t degree_;
  std::optional<bool> semistable_;
  std::optional<bool> stable_;
};

/// Ambient data of the variety X: char(k), d = dim X = rk Omega^1,
/// deg(Omega^1) and the stability attestations of Omega^1.
struct GeometricContext {
  std::int64_t characteristic = 0;
  std::int64_t dim = 1;
  std::int64_t omega_degree = 0;
  bool omega_semistable = true;
  bool omega_stable = false;

  /// Throws InvalidInput when characteristic is neither 0 nor prime, when
  /// dim < 1, or when omega_stable is set without omega_semistable.
  void validate() const;

  friend bool operator==(const GeometricContext&,
                         const GeometricContext&) = default;
};

enum class SubsheafMode { Semistable, Stable };

Rational slope(const BundleData& b);

/// Ranks and degrees add; flags are not inferred.
BundleData direct_sum(std::span<const BundleData> parts);

/// rank = ra*rb, degree = rb*da + ra*db, so slopes add.
BundleData tensor(const BundleData& a, const BundleData& b);

/// Largest degree a rank-`sub_rank` subsheaf of `ambient` can have, given
/// the ambient is (semi)stable. Semistable: floor(sub_rank * mu). Stable and
/// proper: the largest integer strictly below sub_rank * mu. Stable at full
/// rank: degree(ambient).
std::int64_t max_subsheaf_degree(std::int64_t sub_rank,
                                 const BundleData& ambient, SubsheafMode mode);

std::string to_string(SubsheafMode mode);

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t pow(std::int64_t base, std::int64_t exp);

}  // namespace checked

}  // namespace hodge
