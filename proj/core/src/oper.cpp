#include "hodge/oper.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

GriffithsFiltration::GriffithsFiltration(GeometricContext context,
                                         std::vector<BundleData> graded,
                                         bool transversal,
                                         bool theta_squares_to_zero,
                                         bool theta_iso)
    : context_(context),
      graded_(std::move(graded)),
      transversal_(transversal),
      theta_squares_to_zero_(theta_squares_to_zero),
      theta_iso_(theta_iso) {
  context_.validate();
  if (graded_.empty()) throw InvalidInput("filtration has no graded pieces");
  if (!theta_iso_) return;
  const auto d = context_.dim;
  for (std::size_t i = 1; i < graded_.size(); ++i) {
    const auto& prev = graded_[i - 1];
    const auto want_rank = checked::mul(d, prev.rank());
    const auto want_degree =
        checked::add(checked::mul(d, prev.degree()),
                     checked::mul(prev.rank(), context_.omega_degree));
    if (graded_[i].rank() != want_rank || graded_[i].degree() != want_degree)
      throw InvalidInput("gr^" + std::to_string(i) + " = (" +
                         std::to_string(graded_[i].rank()) + ", " +
                         std::to_string(graded_[i].degree()) +
                         ") is not gr^" + std::to_string(i - 1) +
                         " (x) Omega^1 = (" + std::to_string(want_rank) +
                         ", " + std::to_string(want_degree) + ")");
  }
}

ConnectionPair::ConnectionPair(BundleData total, bool flat,
                               std::optional<GriffithsFiltration> filtration,
                               std::int64_t characteristic)
    : total_(std::move(total)),
      flat_(flat),
      filtration_(std::move(filtration)),
      characteristic_(characteristic) {
  GeometricContext probe;
  probe.characteristic = characteristic_;
  probe.validate();
  if (characteristic_ == 0 && flat_ && total_.degree() != 0)
    throw InvalidInput("a flat connection in characteristic 0 forces degree 0");
  if (filtration_) {
    if (filtration_->context().characteristic != characteristic_)
      throw InvalidInput("connection pair characteristic differs from the "
                         "filtration context");
    const auto sum = filtration_->total();
    if (sum.rank() != total_.rank() || sum.degree() != total_.degree())
      throw InvalidInput("graded pieces sum to (" + std::to_string(sum.rank()) +
                         ", " + std::to_string(sum.degree()) +
                         "), total is (" + std::to_string(total_.rank()) +
                         ", " + std::to_string(total_.degree()) + ")");
  }
}

HodgeSystem graded_of_filtration(const GriffithsFiltration& f) {
  if (!f.transversal() || !f.theta_squares_to_zero())
    throw InvalidInput("not a Higgs-inducing filtration");
  ThetaMode theta = ThetaIsomorphisms{};
  if (!f.theta_iso()) theta = ThetaDeclared{};
  return HodgeSystem(f.context(), f.graded(), std::move(theta));
}

OperCheck is_generalized_oper(const GriffithsFiltration& f) {
  OperCheck out;
  if (!f.transversal()) out.reasons.emplace_back("filtration not transversal");
  if (!f.theta_squares_to_zero())
    out.reasons.emplace_back("theta wedge theta not zero");
  if (!f.theta_iso()) out.reasons.emplace_back("θ not isomorphism");
  for (std::size_t i = 0; i < f.graded().size(); ++i) {
    if (!f.graded()[i].flagged_semistable())
      out.reasons.push_back("gr^" + std::to_string(i) + " not semistable");
  }
  out.is_oper = out.reasons.empty();
  out.classical =
      out.is_oper && std::all_of(f.graded().begin(), f.graded().end(),
                                 [](const auto& g) { return g.rank() == 1; });
  return out;
}

Verdict oper_semistability(const GriffithsFiltration& f) {
  const auto check = is_generalized_oper(f);
  if (!check.is_oper)
    throw InvalidInput("not a generalized oper: " + check.reasons.front());
  if (f.context().omega_degree < 0)
    throw HypothesisViolated("deg(Omega^1) < 0");
  const auto sys = graded_of_filtration(f);
  auto v = criterion_semistable(sys);
  if (v.semistable != Tri::Yes)
    throw Inconsistency("generalized oper graded verdict is not semistable");
  if (f.context().omega_degree > 0) {
    const auto t = criterion_stable(sys);
    if (t.stable == Tri::Yes) v.stable = Tri::Yes;
  }
  v.provenance = "generalized oper: graded Higgs bundle semistable";
  v.validate();
  return v;
}

Verdict connection_verdict(const ConnectionPair& p,
                           const Verdict& graded_verdict) {
  Verdict v;
  if (graded_verdict.semistable == Tri::Yes) {
    v.semistable = Tri::Yes;
    v.provenance = "graded Higgs bundle semistable";
    if (graded_verdict.stable == Tri::Yes) {
      v.stable = Tri::Yes;
      v.provenance = "graded Higgs bundle stable";
    }
  }
  if (p.characteristic() == 0 && p.flat() && v.semistable != Tri::Yes) {
    // Every subsheaf preserved by a flat connection has c_1 = 0 in char 0.
    v.semistable = Tri::Yes;
    v.provenance = "flat connection in characteristic 0";
  }
  if (v.provenance.empty()) v.provenance = "no transfer applies";
  v.validate();
  return v;
}

std::optional<HNProfile> oper_hn_profile(const GriffithsFiltration& f) {
  if (!is_generalized_oper(f).is_oper || f.context().omega_degree <= 0)
    return std::nullopt;
  std::vector<BundleData> reversed(f.graded().rbegin(), f.graded().rend());
  HNProfile hn(std::move(reversed));
  if (!validate_hn(hn).valid)
    throw Inconsistency("generalized oper graded slopes do not increase");
  return hn;
}

}  // namespace hodge
