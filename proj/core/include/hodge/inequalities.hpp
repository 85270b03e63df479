#pragma once

#include <cstdint>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Two rational sequences of equal length n >= 1.
class SequencePair {
 public:
  SequencePair(std::vector<Rational> a, std::vector<Rational> b);

  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }
  std::size_t size() const { return a_.size(); }

 private:
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Outcome of evaluating `lhs <= rhs` exactly.
struct InequalityWitness {
  bool holds;
  Rational lhs;
  Rational rhs;
};

/// a nonincreasing, b nondecreasing:  n * sum(a_i b_i) <= sum(a) * sum(b).
/// Throws InvalidInput naming the first index where monotonicity fails.
InequalityWitness chebyshev_upper(const SequencePair& p);

/// a, b both nondecreasing:  sum(b) * sum(a) <= n * sum(a_i b_i).
InequalityWitness chebyshev_lower(const SequencePair& p);

/// For d >= 1 and 0 <= r <= n:
///   (sum_{i<=r} i d^{i-1}) (sum_{j<=n} d^j)
///     <= (sum_{i<=n} i d^{i-1}) (sum_{j<=r} d^j)
/// The i = 0 term of sum i d^{i-1} is 0, including for d = 1.
InequalityWitness hodge_sum_inequality(std::int64_t d, std::int64_t r,
                                       std::int64_t n);

struct SweepRow {
  std::int64_t d;
  std::int64_t checked;
  std::int64_t passed;
  std::int64_t equalities;  // r = n cases and any other ties
};

/// Every (r, n) with 0 <= r <= n <= n_max, for each d in 1..d_max.
std::vector<SweepRow> sweep_hodge_sum(std::int64_t d_max, std::int64_t n_max);

}  // namespace hodge
