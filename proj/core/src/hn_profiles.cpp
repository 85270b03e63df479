#include "hodge/hn_profiles.hpp"

#include "hodge/errors.hpp"

namespace hodge {

HNProfile::HNProfile(std::vector<BundleData> quotients) {
  if (quotients.empty()) throw InvalidInput("empty HN profile");
  quotients_.reserve(quotients.size());
  for (const auto& q : quotients) {
    if (q.semistable() == false)
      throw InvalidInput("HN quotient flagged not semistable");
    quotients_.emplace_back(q.rank(), q.degree(), true, q.stable());
  }
}

HNValidation validate_hn(const HNProfile& p) {
  const auto& qs = p.quotients();
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    if (!(slope(qs[i]) > slope(qs[i + 1]))) return {false, i};
  }
  return {};
}

HNProfile tensor_hn(const HNProfile& p, const BundleData& w) {
  if (!w.flagged_semistable())
    throw InvalidInput("tensor_hn: w must be flagged semistable");
  if (const auto v = validate_hn(p); !v.valid)
    throw InvalidInput("tensor_hn: invalid HN profile at index " +
                       std::to_string(*v.first_violation));
  std::vector<BundleData> out;
  out.reserve(p.size());
  for (const auto& q : p.quotients()) {
    const auto t = tensor(q, w);
    out.emplace_back(t.rank(), t.degree(), true);
  }
  return HNProfile(std::move(out));
}

std::vector<LatticePoint> hn_polygon(const HNProfile& p) {
  if (const auto v = validate_hn(p); !v.valid)
    throw InvalidInput("hn_polygon: invalid HN profile at index " +
                       std::to_string(*v.first_violation));
  std::vector<LatticePoint> pts{{0, 0}};
  for (const auto& q : p.quotients()) {
    const auto& last = pts.back();
    pts.push_back({checked::add(last.rank, q.rank()),
                   checked::add(last.degree, q.degree())});
  }
  return pts;
}

bool polygon_concave(const std::vector<LatticePoint>& points) {
  std::optional<Rational> prev;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto dr = points[i].rank - points[i - 1].rank;
    const auto dd = points[i].degree - points[i - 1].degree;
    if (dr <= 0) return false;
    Rational s(dd, dr);
    if (prev && !(s < *prev)) return false;
    prev = s;
  }
  return true;
}

}  // namespace hodge
