#include "hodge/inequalities.hpp"

#include "hodge/errors.hpp"

namespace hodge {

SequencePair::SequencePair(std::vector<Rational> a, std::vector<Rational> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw InvalidInput("sequence pair must be non-empty");
  if (a_.size() != b_.size())
    throw InvalidInput("sequence lengths differ: " +
                       std::to_string(a_.size()) + " vs " +
                       std::to_string(b_.size()));
}

namespace {

enum class Direction { NonIncreasing, NonDecreasing };

void require_monotone(const std::vector<Rational>& xs, Direction dir,
                      const char* name) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const bool ok = dir == Direction::NonDecreasing ? xs[i - 1] <= xs[i]
                                                    : xs[i - 1] >= xs[i];
    if (!ok)
      throw InvalidInput(
          std::string("sequence ") + name + " is not " +
          (dir == Direction::NonDecreasing ? "nondecreasing" : "nonincreasing") +
          " at index " + std::to_string(i));
  }
}

struct Sums {
  Rational a;
  Rational b;
  Rational ab;
  Rational n;
};

Sums sums(const SequencePair& p) {
  Sums s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s.a += p.a()[i];
    s.b += p.b()[i];
    s.ab += p.a()[i] * p.b()[i];
  }
  s.n = Rational(static_cast<std::int64_t>(p.size()));
  return s;
}

mpz_class geometric_sum(long d, std::int64_t k) {
  mpz_class sum = 0, power = 1;
  for (std::int64_t j = 0; j <= k; ++j) {
    sum += power;
    power *= d;
  }
  return sum;
}

mpz_class derivative_sum(long d, std::int64_t k) {
  mpz_class sum = 0;
  for (std::int64_t i = 1; i <= k; ++i) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(i - 1));
    sum += term * static_cast<long>(i);
  }
  return sum;
}

}  // namespace

InequalityWitness chebyshev_upper(const SequencePair& p) {
  require_monotone(p.a(), Direction::NonIncreasing, "a");
  require_monotone(p.b(), Direction::NonDecreasing, "b");
  const auto s = sums(p);
  auto lhs = s.n * s.ab;
  auto rhs = s.a * s.b;
  return {lhs <= rhs, std::move(lhs), std::move(rhs)};
}

InequalityWitness chebyshev_lower(const SequencePair& p) {
  require_monotone(p.a(), Direction::NonDecreasing, "a");
  require_monotone(p.b(), Direction::NonDecreasing, "b");
  const auto s = sums(p);
  auto lhs = s.b * s.a;
  auto rhs = s.n * s.ab;
  return {lhs <= rhs, std::move(lhs), std::move(rhs)};
}

InequalityWitness hodge_sum_inequality(std::int64_t d, std::int64_t r,
                                       std::int64_t n) {
  if (d < 1) throw InvalidInput("d must be >= 1");
  if (r < 0 || n < 0) throw InvalidInput("r and n must be non-negative");
  if (r > n)
    throw InvalidInput("r = " + std::to_string(r) + " exceeds n = " +
                       std::to_string(n));
  const long dl = static_cast<long>(d);
  const mpz_class lhs = derivative_sum(dl, r) * geometric_sum(dl, n);
  const mpz_class rhs = derivative_sum(dl, n) * geometric_sum(dl, r);
  return {lhs <= rhs, Rational(lhs, 1), Rational(rhs, 1)};
}

std::vector<SweepRow> sweep_hodge_sum(std::int64_t d_max, std::int64_t n_max) {
  if (d_max < 1 || n_max < 0)
    throw InvalidInput("sweep needs d_max >= 1 and n_max >= 0");
  std::vector<SweepRow> rows;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    SweepRow row{d, 0, 0, 0};
    for (std::int64_t n = 0; n <= n_max; ++n) {
      for (std::int64_t r = 0; r <= n; ++r) {
        const auto w = hodge_sum_inequality(d, r, n);
        ++row.checked;
        if (w.holds) ++row.passed;
        if (w.lhs == w.rhs) ++row.equalities;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hodge
