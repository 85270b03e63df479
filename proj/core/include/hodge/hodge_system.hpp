#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hodge/hn_profiles.hpp"
#include "hodge/profile.hpp"
#include "hodge/slope_core.hpp"

namespace hodge {

/// theta restricts to isomorphisms E_i -> E_{i-1} (x) Omega^1 for i >= 1.
struct ThetaIsomorphisms {
  friend bool operator==(const ThetaIsomorphisms&,
                         const ThetaIsomorphisms&) = default;
};

/// theta is not known to be an isomorphism; the caller lists the
/// theta-invariant subobjects it knows about (possibly none).
struct ThetaDeclared {
  std::vector<SubsystemProfile> invariant;
  friend bool operator==(const ThetaDeclared&, const ThetaDeclared&) = default;
};

using ThetaMode = std::variant<ThetaIsomorphisms, ThetaDeclared>;

/// System of Hodge bundles E = E_0 + ... + E_n; theta lowers the index by
/// one and E_{-1} = 0.
///
/// In isomorphism mode the constructor checks that the components are the
/// numerical shadow of E_i = E_0 (x) (Omega^1)^{(x)i}:
///   rk E_i  = d^i rk E_0
///   deg E_i = i d^{i-1} deg(Omega^1) rk E_0 + d^i deg E_0
class HodgeSystem {
 public:
  HodgeSystem(GeometricContext context, std::vector<BundleData> components,
              ThetaMode theta = ThetaIsomorphisms{});

  const GeometricContext& context() const { return context_; }
  const std::vector<BundleData>& components() const { return components_; }
  const BundleData& component(std::size_t i) const { return components_[i]; }
  const ThetaMode& theta() const { return theta_; }

  /// Top index n.
  std::size_t top() const { return components_.size() - 1; }
  bool isomorphisms() const {
    return std::holds_alternative<ThetaIsomorphisms>(theta_);
  }
  bool all_flagged_semistable() const;
  bool all_flagged_stable() const;

  BundleData total() const { return direct_sum(components_); }

 private:
  GeometricContext context_;
  std::vector<BundleData> components_;
  ThetaMode theta_;
};

/// (rk, deg) of E_0 (x) (Omega^1)^{(x)i}, flags dropped.
BundleData tensor_tower_component(const BundleData& base,
                                  const GeometricContext& context,
                                  std::int64_t i);

/// Builds E_0..E_n from E_0 = base in isomorphism mode.
///
/// E_0 keeps base's flags. For i >= 1 a false flag always propagates (a
/// destabilizer F of E_0 gives F (x) Omega^i). A true semistable flag
/// propagates when Omega^1 is semistable and either char = 0 or d = 1; a
/// true stable flag propagates only when d = 1 (Omega^1 is a line bundle).
HodgeSystem derive_components(const BundleData& base,
                              const GeometricContext& context, std::int64_t n);

/// mu(E_0 + ... + E_k) in isomorphism mode, computed in closed form as
/// mu(E_0) + deg(Omega^1) * (sum_{i<=k} i d^{i-1}) / (sum_{i<=k} d^i).
Rational partial_slope(const HodgeSystem& sys, std::size_t k);

/// mu(E), from the direct sum of the components; any theta mode.
Rational total_slope(const HodgeSystem& sys);

/// Carries a subsheaf F_0 of E_0 up the tower: F_p = F_0 (x) Omega^p.
/// The resulting slope satisfies slope - mu(E) = mu(F_0) - mu(E_0).
SubsystemProfile transport_subsystem(const HodgeSystem& sys,
                                     const BundleData& f0);

/// Caller-supplied facts about E_0 that sheaf data alone would provide.
struct ConverseData {
  /// HN profile of an unstable E_0; its top piece is transported.
  std::optional<HNProfile> e0_hn;
  /// A proper subsheaf of E_0 with mu equal to mu(E_0).
  std::optional<BundleData> e0_equal_slope_sub;
};

/// Semistability criterion for isomorphism-mode systems with
/// deg(Omega^1) >= 0:
///   - every E_i flagged semistable                         -> Yes;
///   - char 0, Omega^1 semistable, E_0 flagged semistable   -> Yes;
///   - char 0, Omega^1 semistable, E_0 unstable with HN data -> No, with the
///     transported maximal destabilizer as certificate;
///   - otherwise Unknown.
Verdict criterion_semistable(const HodgeSystem& sys,
                             const ConverseData& data = {});

/// Stability criterion for isomorphism-mode systems with deg(Omega^1) > 0:
///   - every E_i flagged stable -> Yes;
///   - char 0 on a curve (d = 1) with some E_p flagged not stable -> No,
///     with a certificate when an equal-slope subsheaf of E_0 is supplied;
///   - otherwise Unknown.
Verdict criterion_stable(const HodgeSystem& sys,
                         const ConverseData& data = {});

/// Both criteria merged into one verdict. The stability criterion is only
/// consulted when deg(Omega^1) > 0.
Verdict criteria_verdict(const HodgeSystem& sys,
                         const ConverseData& data = {});

}  // namespace hodge
