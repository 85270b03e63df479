#include "hodge/slope_core.hpp"

#include <numeric>

#include "hodge/errors.hpp"
#include "wide_int.hpp"

namespace hodge {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Overflow("integer overflow in degree/rank arithmetic");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Overflow("integer overflow in degree/rank arithmetic");
  return out;
}

std::int64_t pow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out = mul(out, base);
  return out;
}

}  // namespace checked

BundleData::BundleData(std::int64_t rank, std::int64_t degree,
                       std::optional<bool> semistable,
                       std::optional<bool> stable)
    : rank_(rank), degree_(degree), semistable_(semistable), stable_(stable) {
  if (rank_ < 1)
    throw InvalidInput("bundle rank must be >= 1, got " +
                       std::to_string(rank_));
  if (stable_ == true) {
    if (semistable_ == false)
      throw InvalidInput("bundle flagged stable but not semistable");
    semistable_ = true;
  }
  if (semistable_ == false) {
    if (stable_ == true)
      throw InvalidInput("bundle flagged stable but not semistable");
    stable_ = false;
  }
  if (rank_ == 1 && (semistable_ == false || stable_ == false))
    throw InvalidInput("rank-1 bundle cannot be flagged unstable");
  if (semistable_ == true && stable_ == false &&
      std::gcd(rank_, degree_) == 1)
    throw InvalidInput("semistable bundle (" + std::to_string(rank_) + ", " +
                       std::to_string(degree_) +
                       ") with coprime rank and degree is stable");
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q <= p / q; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

void GeometricContext::validate() const {
  if (characteristic != 0 && !is_prime(characteristic))
    throw InvalidInput("characteristic must be 0 or a prime, got " +
                       std::to_string(characteristic));
  if (dim < 1)
    throw InvalidInput("dim must be >= 1, got " + std::to_string(dim));
  if (omega_stable && !omega_semistable)
    throw InvalidInput("omega flagged stable but not semistable");
}

Rational slope(const BundleData& b) { return Rational(b.degree(), b.rank()); }

BundleData direct_sum(std::span<const BundleData> parts) {
  if (parts.empty()) throw InvalidInput("empty direct sum");
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  for (const auto& p : parts) {
    rank = checked::add(rank, p.rank());
    degree = checked::add(degree, p.degree());
  }
  return BundleData(rank, degree);
}

BundleData tensor(const BundleData& a, const BundleData& b) {
  return BundleData(checked::mul(a.rank(), b.rank()),
                    checked::add(checked::mul(b.rank(), a.degree()),
                                 checked::mul(a.rank(), b.degree())));
}

std::int64_t max_subsheaf_degree(std::int64_t sub_rank,
                                 const BundleData& ambient,
                                 SubsheafMode mode) {
  if (sub_rank < 1 || sub_rank > ambient.rank())
    throw InvalidInput("sub_rank " + std::to_string(sub_rank) +
                       " outside 1.." + std::to_string(ambient.rank()));
  const bool flag_ok = mode == SubsheafMode::Semistable
                           ? ambient.flagged_semistable()
                           : ambient.flagged_stable();
  if (!flag_ok) throw InvalidInput("flag precondition violated");

  if (sub_rank == ambient.rank()) return ambient.degree();

  // sub_rank * degree / rank, floored, exact in 128 bits.
  const detail::Int128 num = static_cast<detail::Int128>(sub_rank) * ambient.degree();
  const detail::Int128 den = ambient.rank();
  detail::Int128 q = num / den;
  const detail::Int128 r = num % den;
  if (r != 0 && num < 0) --q;
  if (mode == SubsheafMode::Stable && r == 0) --q;
  return static_cast<std::int64_t>(q);
}

std::string to_string(SubsheafMode mode) {
  return mode == SubsheafMode::Semistable ? "semistable" : "stable";
}

}  // namespace hodge
