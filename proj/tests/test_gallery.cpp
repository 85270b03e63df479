#include <doctest.h>

#include "hodge/errors.hpp"
#include "hodge/gallery.hpp"

using namespace hodge;

TEST_CASE("strictly semistable family") {
  const auto e = example_strictly_semistable(2);
  CHECK(e.system.component(0).numeric() == BundleData(2, -2));
  CHECK(e.system.component(1).numeric() == BundleData(2, 2));
  CHECK(total_slope(e.system) == Rational(0));
  CHECK(e.declared_subobject->slope() == Rational(0));
  CHECK(e.expected.semistable == Tri::Yes);
  CHECK(e.expected.stable == Tri::No);

  const auto g1 = example_strictly_semistable(1);
  CHECK(g1.system.context().omega_degree == 0);
  for (const auto& c : g1.system.components()) CHECK(slope(c) == Rational(0));

  const auto g3 = example_strictly_semistable(3);
  CHECK(g3.system.component(0).numeric() == BundleData(2, -4));
  CHECK(g3.system.component(1).numeric() == BundleData(2, 4));
  CHECK(g3.declared_subobject->entries() ==
        std::vector<ProfileEntry>{{1, -2}, {1, 2}});
  CHECK_THROWS_AS(example_strictly_semistable(0), InvalidInput);
}

TEST_CASE("surjective-not-isomorphism family") {
  const auto e = example_surjective_not_iso(2, 3);
  CHECK(total_slope(e.system) == Rational(8, 3));
  CHECK(e.expected.semistable == Tri::No);
  CHECK(e.expected.certificate->slope == Rational(3));
  CHECK(total_slope(example_surjective_not_iso(2, 5).system) == Rational(4));
  CHECK(total_slope(example_surjective_not_iso(3, 5).system) == Rational(14, 3));
  CHECK_THROWS_WITH(example_surjective_not_iso(2, 2),
                    "hypothesis d > 2g-2 violated");
}

TEST_CASE("injective-not-isomorphism family") {
  for (auto [g, d0] : {std::pair{2, 4}, {2, 1}, {5, 2}}) {
    const auto e = example_injective_not_iso(g, d0);
    CHECK(total_slope(e.system) == Rational(0));
    CHECK(e.expected.certificate->gap() == Rational(d0));
  }
  CHECK_THROWS_AS(example_injective_not_iso(2, 0), InvalidInput);
}

TEST_CASE("unstable-component family") {
  const auto e = example_unstable_component(2, 1);
  CHECK(e.system.component(1).numeric() == BundleData(2, -1));
  CHECK(e.system.component(1).semistable() == false);
  CHECK(e.expected.certificate->gap() == Rational(1));
  REQUIRE(e.component_hn);
  CHECK(validate_hn(*e.component_hn).valid);
  CHECK(example_unstable_component(2, 3).system.component(1).numeric() ==
        BundleData(2, -3));
  const auto g3 = example_unstable_component(3, 2);
  REQUIRE(g3.component_hn);
  CHECK(g3.component_hn->quotients()[0].numeric() == BundleData(1, 6));
  CHECK(g3.component_hn->quotients()[1].numeric() == BundleData(1, -8));
  CHECK_THROWS_AS(example_unstable_component(2, 0), InvalidInput);
}

TEST_CASE("every entry reproduces its verdict") {
  for (const auto& name : gallery_names())
    for (std::int64_t g = 2; g <= 5; ++g) {
      const auto e = make_gallery_entry(name, GalleryParams{g, 2 * g, {}});
      CHECK(verdicts_agree(e.expected, reproduce(e)));
      if (name != "strictly-semistable")
        CHECK(e.expected.certificate->gap() > Rational(0));
      else
        CHECK(e.system.total().degree() == 0);
    }
  CHECK_THROWS_AS(make_gallery_entry("nope", {}), InvalidInput);
}

TEST_CASE("verdicts_agree compares tri-states and certificates") {
  const auto e = example_strictly_semistable(2);
  auto v = e.expected;
  CHECK(verdicts_agree(e.expected, v));
  v.stable = Tri::Unknown;
  CHECK_FALSE(verdicts_agree(e.expected, v));
  v = e.expected;
  v.certificate.reset();
  CHECK_FALSE(verdicts_agree(e.expected, v));
}
