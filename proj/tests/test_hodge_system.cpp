#include <doctest.h>

#include <random>

#include "hodge/errors.hpp"
#include "hodge/hodge_system.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace {

GeometricContext curve(std::int64_t omega) {
  GeometricContext c;
  c.dim = 1;
  c.omega_degree = omega;
  c.omega_stable = true;
  return c;
}

GeometricContext context(std::int64_t d, std::int64_t omega) {
  GeometricContext c;
  c.dim = d;
  c.omega_degree = omega;
  return c;
}

HodgeSystem strictly_semistable() {
  return HodgeSystem(curve(2), {BundleData(2, -2, true, false),
                                BundleData(2, 2, true, false)});
}

}  // namespace

TEST_CASE("derive_components examples") {
  const auto s = derive_components(BundleData(1, 0), curve(2), 3);
  REQUIRE(s.components().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(s.component(i).rank() == 1);
    CHECK(s.component(i).degree() == static_cast<std::int64_t>(2 * i));
  }
  const auto single = derive_components(BundleData(3, 5), curve(2), 0);
  CHECK(single.components().size() == 1);
  CHECK(single.component(0) == BundleData(3, 5));
  const auto ex = derive_components(BundleData(2, -2), curve(2), 1);
  CHECK(ex.component(0).numeric() == BundleData(2, -2));
  CHECK(ex.component(1).numeric() == BundleData(2, 2));
  CHECK_THROWS_AS(derive_components(BundleData(1, 0), curve(2), -1),
                  InvalidInput);
}

TEST_CASE("tower components agree with iterated tensor") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> rk(1, 4), dg(-20, 20), dd(1, 4),
      om(-3, 6);
  for (int t = 0; t < 400; ++t) {
    const oracle::RD base{rk(rng), dg(rng)};
    const auto d = dd(rng), omega = om(rng);
    const auto sys = derive_components(BundleData(base.rank, base.degree),
                                       context(d, omega), 5);
    for (int i = 0; i <= 5; ++i) {
      const auto want = oracle::tower(base, d, omega, i);
      CHECK(sys.component(static_cast<std::size_t>(i)).rank() == want.rank);
      CHECK(sys.component(static_cast<std::size_t>(i)).degree() ==
            want.degree);
    }
  }
}

TEST_CASE("flag propagation") {
  const auto ss = derive_components(BundleData::semistable_bundle(2, 0),
                                    context(2, 3), 2);
  CHECK(ss.all_flagged_semistable());
  CHECK_FALSE(ss.all_flagged_stable());
  const auto st = derive_components(BundleData::stable_bundle(2, 1), curve(2), 2);
  CHECK(st.all_flagged_stable());
  // Positive characteristic in higher dimension: no propagation of "yes".
  auto cp = context(2, 3);
  cp.characteristic = 5;
  const auto p = derive_components(BundleData::semistable_bundle(2, 0), cp, 1);
  CHECK(p.component(1).semistable() == std::nullopt);
  const auto un = derive_components(BundleData(2, 1, false), context(2, 3), 1);
  CHECK(un.component(1).semistable() == false);
}

TEST_CASE("isomorphism mode rejects inconsistent components") {
  CHECK_THROWS_WITH(HodgeSystem(curve(2), {BundleData(2, -2), BundleData(2, 1)}),
                    doctest::Contains("is not E_0 (x) Omega^1"));
  CHECK_THROWS_AS(HodgeSystem(curve(2), {}), InvalidInput);
  CHECK_THROWS_AS(HodgeSystem(curve(2), {BundleData(2, -2, true, false),
                                         BundleData(2, 2, false)}),
                  InvalidInput);
  CHECK_NOTHROW(HodgeSystem(curve(2), {BundleData(1, 0), BundleData(2, 5)},
                            ThetaDeclared{}));
}

TEST_CASE("partial_slope examples") {
  const auto s = derive_components(BundleData(1, 0), curve(2), 3);
  CHECK(partial_slope(s, 1) == Rational(1));
  CHECK(partial_slope(s, 0) == slope(s.component(0)));
  CHECK(partial_slope(strictly_semistable(), 1) == Rational(0));
  CHECK_THROWS_AS(partial_slope(s, 4), InvalidInput);
}

TEST_CASE("partial_slope agrees with direct summation") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> rk(1, 5), dg(-30, 30), dd(1, 5),
      om(0, 8);
  for (int t = 0; t < 300; ++t) {
    const auto sys = derive_components(BundleData(rk(rng), dg(rng)),
                                       context(dd(rng), om(rng)), 6);
    std::vector<oracle::RD> prefix;
    for (std::size_t k = 0; k <= 6; ++k) {
      prefix.push_back({sys.component(k).rank(), sys.component(k).degree()});
      CHECK(partial_slope(sys, k) == oracle::mu_of_sum(prefix));
    }
    CHECK(total_slope(sys) == oracle::mu_of_sum(prefix));
  }
}

TEST_CASE("partial slopes increase when deg Omega > 0") {
  const auto sys = derive_components(BundleData(2, 3), context(2, 1), 6);
  for (std::size_t k = 1; k <= 6; ++k)
    CHECK(partial_slope(sys, k - 1) < partial_slope(sys, k));
}

TEST_CASE("total_slope examples") {
  CHECK(total_slope(strictly_semistable()) == Rational(0));
  CHECK(total_slope(HodgeSystem(curve(2), {BundleData(3, 2)})) ==
        Rational(2, 3));
  const HodgeSystem declared(curve(2), {BundleData(1, 3), BundleData(2, 1)},
                             ThetaDeclared{});
  CHECK(total_slope(declared) == Rational(4, 3));
}

TEST_CASE("transport_subsystem examples") {
  const auto ex = strictly_semistable();
  const auto full = transport_subsystem(ex, ex.component(0));
  CHECK(full.slope() == total_slope(ex));
  const auto p = transport_subsystem(derive_components(BundleData(2, -2), curve(2), 1),
                                     BundleData(1, 0));
  CHECK(p.entries() == std::vector<ProfileEntry>{{1, 0}, {1, 2}});
  CHECK(p.slope() == Rational(1));
  const auto q = transport_subsystem(derive_components(BundleData(2, 0), curve(0), 1),
                                     BundleData(1, 1));
  CHECK(q.entries() == std::vector<ProfileEntry>{{1, 1}, {1, 1}});
  CHECK(q.slope() == Rational(1));
  CHECK_THROWS_AS(transport_subsystem(ex, BundleData(3, 0)), InvalidInput);
}

TEST_CASE("criterion_semistable") {
  SUBCASE("strictly semistable example is semistable") {
    const auto v = criterion_semistable(strictly_semistable());
    CHECK(v.semistable == Tri::Yes);
  }
  SUBCASE("single semistable bundle") {
    const HodgeSystem s(curve(2), {BundleData::semistable_bundle(2, 1)});
    CHECK(criterion_semistable(s).semistable == Tri::Yes);
  }
  SUBCASE("unstable E_0 with HN data") {
    const HodgeSystem s(curve(2), {BundleData(2, 1, false), BundleData(2, 5, false)});
    ConverseData data;
    data.e0_hn = HNProfile({BundleData(1, 1), BundleData(1, 0)});
    const auto v = criterion_semistable(s, data);
    CHECK(v.semistable == Tri::No);
    CHECK(v.stable == Tri::No);
    REQUIRE(v.certificate);
    CHECK(v.certificate->slope == Rational(2));
    CHECK(v.certificate->gap() == Rational(2) - Rational(6, 4));
    CHECK(criterion_semistable(s).semistable == Tri::Unknown);
    data.e0_hn = HNProfile({BundleData(1, 0), BundleData(1, 1)});
    CHECK_THROWS_AS(criterion_semistable(s, data), InvalidInput);
  }
  SUBCASE("hypotheses") {
    const HodgeSystem neg(curve(-2), {BundleData::semistable_bundle(1, 0)});
    CHECK_THROWS_WITH(criterion_semistable(neg),
                      doctest::Contains("hypothesis violated"));
    const HodgeSystem declared(curve(2), {BundleData(1, 0)}, ThetaDeclared{});
    CHECK_THROWS_AS(criterion_semistable(declared), InvalidInput);
  }
}

TEST_CASE("criterion_stable") {
  const HodgeSystem st(curve(2), {BundleData::stable_bundle(2, 1),
                                  BundleData::stable_bundle(2, 5)});
  const auto yes = criterion_stable(st);
  CHECK(yes.stable == Tri::Yes);
  CHECK(yes.semistable == Tri::Yes);

  const auto no = criterion_stable(strictly_semistable());
  CHECK(no.stable == Tri::No);
  CHECK_FALSE(no.certificate);

  ConverseData data;
  data.e0_equal_slope_sub = BundleData(1, -1);
  const auto cert = criterion_stable(strictly_semistable(), data);
  REQUIRE(cert.certificate);
  CHECK(cert.certificate->profile.entries() ==
        std::vector<ProfileEntry>{{1, -1}, {1, 1}});
  CHECK(cert.certificate->gap() == Rational(0));
  data.e0_equal_slope_sub = BundleData(1, 0);
  CHECK_THROWS_AS(criterion_stable(strictly_semistable(), data), InvalidInput);

  const HodgeSystem line(curve(2), {BundleData::stable_bundle(1, 7)});
  CHECK(criterion_stable(line).stable == Tri::Yes);
  CHECK_THROWS_WITH(criterion_stable(HodgeSystem(curve(0), {BundleData(1, 0)})),
                    doctest::Contains("hypothesis violated"));
}

TEST_CASE("criteria_verdict merges both criteria") {
  const auto v = criteria_verdict(strictly_semistable());
  CHECK(v.semistable == Tri::Yes);
  CHECK(v.stable == Tri::No);
  const HodgeSystem flat(curve(0), {BundleData::semistable_bundle(2, 0),
                                    BundleData::semistable_bundle(2, 0)});
  const auto f = criteria_verdict(flat);
  CHECK(f.semistable == Tri::Yes);
  CHECK(f.stable == Tri::Unknown);
}
