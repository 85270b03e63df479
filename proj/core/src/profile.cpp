#include "hodge/profile.hpp"

#include "hodge/errors.hpp"
#include "hodge/slope_core.hpp"

namespace hodge {

SubsystemProfile::SubsystemProfile(std::vector<ProfileEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("empty subsystem profile");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].rank < 1)
      throw InvalidInput("profile rank at index " + std::to_string(i) +
                         " must be positive");
  }
}

std::int64_t SubsystemProfile::total_rank() const {
  std::int64_t sum = 0;
  for (const auto& e : entries_) sum = checked::add(sum, e.rank);
  return sum;
}

std::int64_t SubsystemProfile::total_degree() const {
  std::int64_t sum = 0;
  for (const auto& e : entries_) sum = checked::add(sum, e.degree);
  return sum;
}

Rational SubsystemProfile::slope() const {
  return Rational(total_degree(), total_rank());
}

bool SubsystemProfile::rank_nonincreasing() const {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].rank > entries_[i - 1].rank) return false;
  return true;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    case Tri::Unknown:
      return "unknown";
  }
  return "unknown";
}

void Verdict::validate() const {
  if (stable == Tri::Yes && semistable != Tri::Yes)
    throw Inconsistency("verdict: stable=yes without semistable=yes");
  if (semistable == Tri::No && stable != Tri::No)
    throw Inconsistency("verdict: semistable=no but stable is not no");
  if (certificate) {
    const int gap = certificate->gap().sign();
    if (semistable == Tri::No && gap <= 0)
      throw Inconsistency("verdict: semistable=no certificate has no gap");
    if (stable == Tri::No && gap < 0)
      throw Inconsistency("verdict: stable=no certificate below mu(E)");
  }
}

}  // namespace hodge
