#include "hodge/hodge_system.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

void require_isomorphisms(const HodgeSystem& sys, const char* what) {
  if (!sys.isomorphisms())
    throw InvalidInput(std::string(what) +
                       " requires isomorphism structure on theta");
}

// sum_{i=0}^k d^i and sum_{i=0}^k i d^{i-1}, with the i = 0 term of the
// second sum equal to 0.
std::pair<mpz_class, mpz_class> tower_sums(std::int64_t d, std::size_t k) {
  mpz_class geometric = 0;
  mpz_class derivative = 0;
  mpz_class power = 1;  // d^i
  mpz_class prev = 0;   // d^{i-1}, zero at i = 0
  for (std::size_t i = 0; i <= k; ++i) {
    geometric += power;
    derivative += mpz_class(static_cast<unsigned long>(i)) * prev;
    prev = power;
    power *= static_cast<long>(d);
  }
  return {geometric, derivative};
}

std::optional<bool> propagate_semistable(const BundleData& base,
                                         const GeometricContext& ctx) {
  if (base.semistable() == false) return false;
  if (base.semistable() == true && ctx.omega_semistable &&
      (ctx.characteristic == 0 || ctx.dim == 1))
    return true;
  return std::nullopt;
}

std::optional<bool> propagate_stable(const BundleData& base,
                                     const GeometricContext& ctx) {
  if (base.stable() == false) return false;
  if (base.stable() == true && ctx.dim == 1) return true;
  return std::nullopt;
}

Certificate make_certificate(const HodgeSystem& sys, SubsystemProfile p) {
  auto s = p.slope();
  return Certificate{std::move(p), std::move(s), total_slope(sys)};
}

}  // namespace

HodgeSystem::HodgeSystem(GeometricContext context,
                         std::vector<BundleData> components, ThetaMode theta)
    : context_(context),
      components_(std::move(components)),
      theta_(std::move(theta)) {
  context_.validate();
  if (components_.empty())
    throw InvalidInput("system of Hodge bundles needs at least E_0");
  if (isomorphisms()) {
    const auto& e0 = components_.front();
    for (std::size_t i = 1; i < components_.size(); ++i) {
      const auto want = tensor_tower_component(e0, context_,
                                               static_cast<std::int64_t>(i));
      const auto& got = components_[i];
      if (got.rank() != want.rank() || got.degree() != want.degree())
        throw InvalidInput(
            "component E_" + std::to_string(i) + " = (" +
            std::to_string(got.rank()) + ", " + std::to_string(got.degree()) +
            ") is not E_0 (x) Omega^" + std::to_string(i) + " = (" +
            std::to_string(want.rank()) + ", " +
            std::to_string(want.degree()) + ")");
      // E_i and E_0 differ by a twist by a semistable bundle: in char 0
      // semistability is shared, and on a curve so is stability.
      const bool ss_linked =
          context_.omega_semistable &&
          (context_.characteristic == 0 || context_.dim == 1);
      if (ss_linked && got.semistable() && e0.semistable() &&
          *got.semistable() != *e0.semistable())
        throw InvalidInput("semistability flags of E_0 and E_" +
                           std::to_string(i) + " contradict each other");
      if (context_.dim == 1 && got.stable() && e0.stable() &&
          *got.stable() != *e0.stable())
        throw InvalidInput("stability flags of E_0 and E_" +
                           std::to_string(i) + " contradict each other");
    }
  } else {
    for (const auto& p : std::get<ThetaDeclared>(theta_).invariant) {
      if (p.size() > components_.size())
        throw InvalidInput("declared profile extends past E_n");
    }
  }
}

bool HodgeSystem::all_flagged_semistable() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const auto& c) { return c.flagged_semistable(); });
}

bool HodgeSystem::all_flagged_stable() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const auto& c) { return c.flagged_stable(); });
}

BundleData tensor_tower_component(const BundleData& base,
                                  const GeometricContext& context,
                                  std::int64_t i) {
  const auto d = context.dim;
  const auto di = checked::pow(d, i);
  const auto rank = checked::mul(di, base.rank());
  std::int64_t degree = checked::mul(di, base.degree());
  if (i > 0) {
    const auto twist = checked::mul(
        checked::mul(checked::mul(i, checked::pow(d, i - 1)),
                     context.omega_degree),
        base.rank());
    degree = checked::add(degree, twist);
  }
  return BundleData(rank, degree);
}

HodgeSystem derive_components(const BundleData& base,
                              const GeometricContext& context,
                              std::int64_t n) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  context.validate();
  std::vector<BundleData> comps{base};
  const auto ss = propagate_semistable(base, context);
  const auto st = propagate_stable(base, context);
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto c = tensor_tower_component(base, context, i);
    comps.emplace_back(c.rank(), c.degree(), ss, st);
  }
  return HodgeSystem(context, std::move(comps), ThetaIsomorphisms{});
}

Rational partial_slope(const HodgeSystem& sys, std::size_t k) {
  require_isomorphisms(sys, "partial_slope");
  if (k > sys.top())
    throw InvalidInput("partial_slope: k = " + std::to_string(k) +
                       " exceeds n = " + std::to_string(sys.top()));
  const auto [geometric, derivative] = tower_sums(sys.context().dim, k);
  return slope(sys.component(0)) +
         Rational(mpz_class(static_cast<long>(sys.context().omega_degree)) *
                      derivative,
                  geometric);
}

Rational total_slope(const HodgeSystem& sys) { return slope(sys.total()); }

SubsystemProfile transport_subsystem(const HodgeSystem& sys,
                                     const BundleData& f0) {
  require_isomorphisms(sys, "transport_subsystem");
  if (f0.rank() > sys.component(0).rank())
    throw InvalidInput("transport_subsystem: rank(F_0) = " +
                       std::to_string(f0.rank()) + " exceeds rank(E_0) = " +
                       std::to_string(sys.component(0).rank()));
  std::vector<ProfileEntry> entries;
  entries.reserve(sys.components().size());
  for (std::size_t p = 0; p <= sys.top(); ++p) {
    const auto c = tensor_tower_component(f0, sys.context(),
                                          static_cast<std::int64_t>(p));
    entries.push_back({c.rank(), c.degree()});
  }
  return SubsystemProfile(std::move(entries));
}

Verdict criterion_semistable(const HodgeSystem& sys,
                             const ConverseData& data) {
  require_isomorphisms(sys, "criterion_semistable");
  const auto& ctx = sys.context();
  if (ctx.omega_degree < 0) throw HypothesisViolated("deg(Omega^1) < 0");

  Verdict v;
  const auto& e0 = sys.component(0);
  if (sys.all_flagged_semistable()) {
    v.semistable = Tri::Yes;
    v.provenance = "criterion: every E_i semistable, theta isomorphisms";
  } else if (ctx.characteristic == 0 && ctx.omega_semistable &&
             e0.flagged_semistable()) {
    v.semistable = Tri::Yes;
    v.provenance = "criterion: E_0 semistable, Omega^1 semistable, char 0";
  } else if (ctx.characteristic == 0 && ctx.omega_semistable &&
             e0.semistable() != true && data.e0_hn) {
    const auto& hn = *data.e0_hn;
    if (hn.size() < 2)
      throw InvalidInput("HN profile of an unstable E_0 needs two pieces");
    if (const auto chk = validate_hn(hn); !chk.valid)
      throw InvalidInput("HN profile of E_0 fails strict slope decrease");
    if (hn.total().numeric() != e0.numeric())
      throw InvalidInput("HN profile totals do not match E_0");
    v.semistable = Tri::No;
    v.stable = Tri::No;
    v.certificate = make_certificate(sys, transport_subsystem(sys, hn.top()));
    v.provenance =
        "criterion converse: E_0 unstable, maximal destabilizer transported "
        "(char 0)";
  } else {
    v.provenance = "criterion: hypotheses for a definite verdict not met";
  }
  v.validate();
  return v;
}

Verdict criterion_stable(const HodgeSystem& sys, const ConverseData& data) {
  require_isomorphisms(sys, "criterion_stable");
  const auto& ctx = sys.context();
  if (ctx.omega_degree <= 0) throw HypothesisViolated("deg(Omega^1) <= 0");

  Verdict v;
  const auto& comps = sys.components();
  const bool some_not_stable = std::any_of(
      comps.begin(), comps.end(),
      [](const auto& c) { return c.stable() == false; });

  if (sys.all_flagged_stable()) {
    v.semistable = Tri::Yes;
    v.stable = Tri::Yes;
    v.provenance = "criterion: every E_i stable, deg(Omega^1) > 0";
  } else if (ctx.characteristic == 0 && ctx.dim == 1 && some_not_stable) {
    v.stable = Tri::No;
    v.provenance = "criterion converse on curves: some E_p not stable";
    if (data.e0_equal_slope_sub) {
      const auto& g0 = *data.e0_equal_slope_sub;
      const auto& e0 = sys.component(0);
      if (g0.rank() >= e0.rank() || slope(g0) != slope(e0))
        throw InvalidInput(
            "equal-slope subsheaf of E_0 must be proper with mu = mu(E_0)");
      v.certificate = make_certificate(sys, transport_subsystem(sys, g0));
      v.provenance += ", equal-slope subsheaf of E_0 transported";
    }
  } else {
    v.provenance = "criterion: hypotheses for a definite verdict not met";
  }
  v.validate();
  return v;
}

Verdict criteria_verdict(const HodgeSystem& sys, const ConverseData& data) {
  auto v = criterion_semistable(sys, data);
  if (v.semistable == Tri::No || sys.context().omega_degree <= 0) return v;

  const auto t = criterion_stable(sys, data);
  if (v.semistable == Tri::Unknown) v.semistable = t.semistable;
  v.stable = t.stable;
  v.certificate = t.certificate;
  v.provenance += "; " + t.provenance;
  v.validate();
  return v;
}

}  // namespace hodge
