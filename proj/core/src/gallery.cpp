#include "hodge/gallery.hpp"

#include "hodge/errors.hpp"
#include "hodge/search_oracle.hpp"

namespace hodge {

namespace {

GeometricContext curve_of_genus(std::int64_t g) {
  GeometricContext ctx;
  ctx.characteristic = 0;
  ctx.dim = 1;
  ctx.omega_degree = checked::add(checked::mul(2, g), -2);
  ctx.omega_semistable = true;
  ctx.omega_stable = true;
  return ctx;
}

Verdict destabilized_by(const HodgeSystem& sys, const SubsystemProfile& f,
                        std::string why) {
  Verdict v;
  v.semistable = Tri::No;
  v.stable = Tri::No;
  v.certificate = Certificate{f, f.slope(), total_slope(sys)};
  v.provenance = std::move(why);
  v.validate();
  return v;
}

}  // namespace

GalleryEntry example_strictly_semistable(std::int64_t g) {
  if (g < 1) throw InvalidInput("genus must be >= 1");
  const auto ctx = curve_of_genus(g);
  const auto k = ctx.omega_degree;
  HodgeSystem sys(ctx,
                  {BundleData(2, -k, true, false), BundleData(2, k, true, false)},
                  ThetaIsomorphisms{});
  SubsystemProfile f({{1, -(g - 1)}, {1, g - 1}});

  Verdict expected;
  expected.semistable = Tri::Yes;
  expected.stable = Tri::No;
  expected.certificate = Certificate{f, f.slope(), total_slope(sys)};
  expected.provenance = "equal-slope invariant subobject L_0 + L_1";
  expected.validate();
  return {"strictly-semistable", std::move(sys), std::move(f),
          std::move(expected), std::nullopt};
}

GalleryEntry example_surjective_not_iso(std::int64_t g, std::int64_t d_line) {
  if (g < 2) throw InvalidInput("genus must be >= 2");
  const auto ctx = curve_of_genus(g);
  if (d_line <= ctx.omega_degree)
    throw InvalidInput("hypothesis d > 2g-2 violated");
  SubsystemProfile f({{1, d_line}});
  HodgeSystem sys(ctx,
                  {BundleData::stable_bundle(1, d_line),
                   BundleData(2, checked::add(d_line, ctx.omega_degree), true)},
                  ThetaDeclared{{f}});
  auto expected = destabilized_by(sys, f, "L_0 is theta-invariant");
  return {"surjective-not-iso", std::move(sys), std::move(f),
          std::move(expected), std::nullopt};
}

GalleryEntry example_injective_not_iso(std::int64_t g, std::int64_t d0) {
  if (g < 2) throw InvalidInput("genus must be >= 2");
  if (d0 < 1) throw InvalidInput("deg L_0 must be >= 1");
  const auto ctx = curve_of_genus(g);
  SubsystemProfile f({{1, d0}});
  HodgeSystem sys(ctx,
                  {BundleData::stable_bundle(1, d0),
                   BundleData::stable_bundle(1, -d0)},
                  ThetaDeclared{{f}});
  auto expected =
      destabilized_by(sys, f, "L_0 is theta-invariant of positive degree");
  return {"injective-not-iso", std::move(sys), std::move(f),
          std::move(expected), std::nullopt};
}

GalleryEntry example_unstable_component(std::int64_t g, std::int64_t d0) {
  if (g < 2) throw InvalidInput("genus must be >= 2");
  if (d0 < 1) throw InvalidInput("deg L_0 must be >= 1");
  const auto ctx = curve_of_genus(g);
  const auto k = ctx.omega_degree;
  const BundleData l1(1, -(2 * d0 + k), true, true);
  const BundleData l2(1, d0 + k, true, true);
  const std::vector<BundleData> parts{l1, l2};
  const auto sum = direct_sum(parts);
  const BundleData e1(sum.rank(), sum.degree(), false);

  SubsystemProfile f({{1, d0}});
  HodgeSystem sys(ctx, {BundleData::stable_bundle(1, d0), e1},
                  ThetaDeclared{{f}});
  auto expected = destabilized_by(sys, f, "E_0 = L_0 is theta-invariant");
  HNProfile hn({l2, l1});
  return {"unstable-component", std::move(sys), std::move(f),
          std::move(expected), std::move(hn)};
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{
      "strictly-semistable", "surjective-not-iso", "injective-not-iso",
      "unstable-component"};
  return names;
}

GalleryEntry make_gallery_entry(const std::string& name,
                                const GalleryParams& params) {
  if (name == "strictly-semistable")
    return example_strictly_semistable(params.g);
  if (name == "surjective-not-iso")
    return example_surjective_not_iso(params.g, params.d.value_or(3));
  if (name == "injective-not-iso")
    return example_injective_not_iso(params.g, params.d0.value_or(4));
  if (name == "unstable-component")
    return example_unstable_component(params.g, params.d0.value_or(1));
  throw InvalidInput("unknown gallery entry '" + name + "'");
}

Verdict reproduce(const GalleryEntry& entry) {
  if (entry.system.isomorphisms()) return verdict_from_search(entry.system);
  if (!entry.declared_subobject)
    throw InvalidInput("declared-theta gallery entry without a subobject");
  return check_declared(entry.system, *entry.declared_subobject);
}

bool verdicts_agree(const Verdict& expected, const Verdict& got) {
  if (expected.semistable != got.semistable) return false;
  if (expected.stable != got.stable) return false;
  if (expected.certificate.has_value() != got.certificate.has_value())
    return false;
  if (expected.certificate &&
      expected.certificate->gap() != got.certificate->gap())
    return false;
  return true;
}

}  // namespace hodge
