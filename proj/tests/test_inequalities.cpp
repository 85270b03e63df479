#include <doctest.h>

#include <random>

#include "hodge/errors.hpp"
#include "hodge/inequalities.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace {

std::vector<Rational> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("chebyshev_upper examples") {
  auto w = chebyshev_upper(SequencePair(ints({3, 2, 1}), ints({1, 2, 3})));
  CHECK(w.holds);
  CHECK(w.lhs == Rational(30));
  CHECK(w.rhs == Rational(36));
  w = chebyshev_upper(SequencePair(ints({5, 5, 5, 5}), ints({5, 5, 5, 5})));
  CHECK(w.holds);
  CHECK(w.lhs == Rational(400));
  CHECK(w.lhs == w.rhs);
  w = chebyshev_upper(SequencePair(ints({1, 0}), ints({0, 1})));
  CHECK(w.lhs == Rational(0));
  CHECK(w.rhs == Rational(1));
}

TEST_CASE("chebyshev_lower examples") {
  auto w = chebyshev_lower(SequencePair(ints({1, 2, 3}), ints({1, 2, 3})));
  CHECK(w.holds);
  CHECK(w.lhs == Rational(36));
  CHECK(w.rhs == Rational(42));
  w = chebyshev_lower(SequencePair(ints({2, 2}), ints({-1, -1})));
  CHECK(w.lhs == w.rhs);
  w = chebyshev_lower(SequencePair(ints({0, 1}), ints({0, 1})));
  CHECK(w.lhs == Rational(1));
  CHECK(w.rhs == Rational(2));
}

TEST_CASE("chebyshev preconditions") {
  CHECK_THROWS_WITH(
      chebyshev_upper(SequencePair(ints({1, 2, 0}), ints({1, 2, 3}))),
      doctest::Contains("index 1"));
  CHECK_THROWS_WITH(
      chebyshev_lower(SequencePair(ints({1, 2, 3}), ints({1, 3, 2}))),
      doctest::Contains("index 2"));
  CHECK_THROWS_AS(SequencePair(ints({1}), ints({1, 2})), InvalidInput);
  CHECK_THROWS_AS(SequencePair({}, {}), InvalidInput);
}

TEST_CASE("chebyshev witnesses match the double-sum identity") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(1, 10);
  for (int t = 0; t < 2000; ++t) {
    const auto n = len(rng);
    const auto up = oracle::monotone(rng, n, true);
    const auto down = oracle::monotone(rng, n, false);
    const auto up2 = oracle::monotone(rng, n, true);
    const auto gap_upper = oracle::chebyshev_gap(down, up);
    const auto wu = chebyshev_upper(SequencePair(down, up));
    CHECK(wu.holds);
    CHECK(Rational(2) * (wu.lhs - wu.rhs) == gap_upper);
    const auto wl = chebyshev_lower(SequencePair(up, up2));
    CHECK(wl.holds);
    CHECK(Rational(2) * (wl.rhs - wl.lhs) == oracle::chebyshev_gap(up, up2));
  }
}

TEST_CASE("hodge_sum_inequality examples") {
  auto w = hodge_sum_inequality(2, 1, 2);
  CHECK(w.holds);
  CHECK(w.lhs == Rational(7));
  CHECK(w.rhs == Rational(15));
  w = hodge_sum_inequality(3, 4, 4);
  CHECK(w.lhs == w.rhs);
  w = hodge_sum_inequality(1, 1, 3);
  CHECK(w.lhs == Rational(4));
  CHECK(w.rhs == Rational(12));
  CHECK_THROWS_AS(hodge_sum_inequality(2, 3, 2), InvalidInput);
  CHECK_THROWS_AS(hodge_sum_inequality(0, 0, 2), InvalidInput);
}

TEST_CASE("hodge sums agree with 128-bit naive sums") {
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t n = 0; n <= 14; ++n)
      for (std::int64_t r = 0; r <= n; ++r) {
        const auto w = hodge_sum_inequality(d, r, n);
        const auto lhs = oracle::derivative(d, r) * oracle::geometric(d, n);
        const auto rhs = oracle::derivative(d, n) * oracle::geometric(d, r);
        CHECK(w.lhs.numerator().get_str() == oracle::str(lhs));
        CHECK(w.rhs.numerator().get_str() == oracle::str(rhs));
        CHECK(w.holds == (lhs <= rhs));
      }
}

TEST_CASE("sweep table counts") {
  const auto rows = sweep_hodge_sum(3, 4);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.checked == 15);
    CHECK(r.passed == 15);
    // r = n always ties.
    CHECK(r.equalities >= 5);
  }
  CHECK_THROWS_AS(sweep_hodge_sum(0, 3), InvalidInput);
}
