#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/hn_profiles.hpp"
#include "hodge/hodge_system.hpp"
#include "hodge/profile.hpp"

namespace hodge {

/// Graded pieces gr^i = F^i(E)/F^{i+1}(E), i = 0..n-1, of a filtration of a
/// bundle with connection, together with attestations about the connection.
///
/// When theta_iso is set the constructor checks gr^i ~ gr^{i-1} (x) Omega^1
/// numerically:
///   rk gr^i  = d rk gr^{i-1}
///   deg gr^i = d deg gr^{i-1} + rk gr^{i-1} deg(Omega^1)
class GriffithsFiltration {
 public:
  GriffithsFiltration(GeometricContext context, std::vector<BundleData> graded,
                      bool transversal, bool theta_squares_to_zero,
                      bool theta_iso);

  const GeometricContext& context() const { return context_; }
  const std::vector<BundleData>& graded() const { return graded_; }
  bool transversal() const { return transversal_; }
  bool theta_squares_to_zero() const { return theta_squares_to_zero_; }
  bool theta_iso() const { return theta_iso_; }

  BundleData total() const { return direct_sum(graded_); }

 private:
  GeometricContext context_;
  std::vector<BundleData> graded_;
  bool transversal_;
  bool theta_squares_to_zero_;
  bool theta_iso_;
};

/// (E, nabla): the total bundle, whether nabla is flat, and optionally a
/// filtration whose graded pieces must add up to the total. The base field
/// characteristic is taken from the filtration's context when one is present
/// and must then agree with `characteristic`.
class ConnectionPair {
 public:
  ConnectionPair(BundleData total, bool flat,
                 std::optional<GriffithsFiltration> filtration = std::nullopt,
                 std::int64_t characteristic = 0);

  const BundleData& total() const { return total_; }
  bool flat() const { return flat_; }
  std::int64_t characteristic() const { return characteristic_; }
  const std::optional<GriffithsFiltration>& filtration() const {
    return filtration_;
  }

 private:
  BundleData total_;
  bool flat_;
  std::optional<GriffithsFiltration> filtration_;
  std::int64_t characteristic_;
};

/// (gr, theta_nabla) as a system of Hodge bundles: isomorphism mode when
/// theta_iso, otherwise declared mode with nothing declared. Throws
/// "not a Higgs-inducing filtration" unless transversal and
/// theta_squares_to_zero are both set.
HodgeSystem graded_of_filtration(const GriffithsFiltration& f);

struct OperCheck {
  bool is_oper = false;
  /// Every graded piece has rank 1 (classical oper), on top of is_oper.
  bool classical = false;
  std::vector<std::string> reasons;
};

OperCheck is_generalized_oper(const GriffithsFiltration& f);

/// The associated graded Higgs bundle of a generalized oper with
/// deg(Omega^1) >= 0 is semistable. Throws naming the failing clause when
/// `f` is not a generalized oper.
Verdict oper_semistability(const GriffithsFiltration& f);

/// Transfers a verdict on the graded Higgs bundle to (E, nabla):
///   - graded semistable (resp. stable) -> pair semistable (resp. stable);
///   - char 0 and nabla flat -> pair semistable;
///   - otherwise Unknown.
/// `graded_verdict` is ignored when the pair carries no filtration.
Verdict connection_verdict(const ConnectionPair& p,
                           const Verdict& graded_verdict);

/// For a generalized oper with deg(Omega^1) > 0 the graded slopes strictly
/// increase with i, so gr^{n-1}, ..., gr^0 is an HN profile of E.
std::optional<HNProfile> oper_hn_profile(const GriffithsFiltration& f);

}  // namespace hodge
