// Naive reference computations used to cross-check the library. Nothing here
// calls into hodge_core beyond the value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hodge/rational.hpp"

namespace oracle {

__extension__ typedef __int128 i128;

inline std::string str(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    const int digit = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

struct RD {
  std::int64_t rank;
  std::int64_t degree;
  bool operator==(const RD&) const = default;
  auto operator<=>(const RD&) const = default;
};

inline RD tensor_line_step(RD e, std::int64_t d, std::int64_t omega) {
  // E (x) Omega^1, Omega^1 of rank d and degree omega.
  return {e.rank * d, e.degree * d + e.rank * omega};
}

inline RD tower(RD base, std::int64_t d, std::int64_t omega, int i) {
  for (int k = 0; k < i; ++k) base = tensor_line_step(base, d, omega);
  return base;
}

inline hodge::Rational mu(std::int64_t rank, std::int64_t degree) {
  return hodge::Rational(degree, rank);
}

inline hodge::Rational mu_of_sum(const std::vector<RD>& parts) {
  std::int64_t r = 0, g = 0;
  for (const auto& p : parts) {
    r += p.rank;
    g += p.degree;
  }
  return hodge::Rational(g, r);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Largest degree of a rank-r subsheaf of a (semi)stable bundle of the given
// invariants.
inline std::int64_t bound(std::int64_t r, RD e, bool stable) {
  if (!stable || r == e.rank) return floor_div(r * e.degree, e.rank);
  const std::int64_t num = r * e.degree;
  const std::int64_t f = floor_div(num, e.rank);
  return f * e.rank == num ? f - 1 : f;
}

// Every profile by brute force over the cartesian product of ranks.
inline std::vector<std::vector<RD>> profiles(const std::vector<RD>& comps,
                                             std::int64_t d, bool conservative,
                                             bool stable) {
  std::int64_t total = 0;
  for (const auto& c : comps) total += c.rank;
  std::vector<std::vector<RD>> out;
  std::vector<std::int64_t> ranks(comps.size(), 0);
  while (true) {
    std::size_t support = 0;
    while (support < ranks.size() && ranks[support] > 0) ++support;
    bool ok = support > 0;
    for (std::size_t i = support; ok && i < ranks.size(); ++i)
      ok = ranks[i] == 0;
    for (std::size_t i = 1; ok && i < support; ++i)
      ok = ranks[i] <= (conservative ? d * ranks[i - 1] : ranks[i - 1]);
    std::int64_t sum = 0;
    for (auto r : ranks) sum += r;
    if (ok && sum < total) {
      std::vector<RD> p;
      for (std::size_t i = 0; i < support; ++i)
        p.push_back({ranks[i], bound(ranks[i], comps[i], stable)});
      out.push_back(std::move(p));
    }
    std::size_t k = 0;
    while (k < ranks.size() && ranks[k] == comps[k].rank) ranks[k++] = 0;
    if (k == ranks.size()) break;
    ++ranks[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline i128 geometric(std::int64_t d, std::int64_t k) {
  i128 s = 0, p = 1;
  for (std::int64_t i = 0; i <= k; ++i, p *= d) s += p;
  return s;
}

inline i128 derivative(std::int64_t d, std::int64_t k) {
  i128 s = 0, p = 1;
  for (std::int64_t i = 1; i <= k; ++i, p *= d) s += static_cast<i128>(i) * p;
  return s;
}

// 2 (n sum ab - sum a sum b) written as a double sum.
inline hodge::Rational chebyshev_gap(const std::vector<hodge::Rational>& a,
                                     const std::vector<hodge::Rational>& b) {
  hodge::Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      s += (a[i] - a[j]) * (b[i] - b[j]);
  return s;
}

inline std::vector<hodge::Rational> monotone(std::mt19937_64& rng,
                                             std::size_t n, bool increasing) {
  std::uniform_int_distribution<std::int64_t> num(0, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  std::vector<hodge::Rational> v;
  hodge::Rational x(std::uniform_int_distribution<std::int64_t>(-50, 50)(rng),
                    den(rng));
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(x);
    const hodge::Rational step(num(rng) % 3 == 0 ? 0 : num(rng), den(rng));
    x = increasing ? x + step : x - step;
  }
  return v;
}

}  // namespace oracle
