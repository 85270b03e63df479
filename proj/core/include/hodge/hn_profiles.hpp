#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hodge/slope_core.hpp"

namespace hodge {

/// Harder-Narasimhan data: the successive quotients V_i/V_{i+1}, listed from
/// the top slope down. Quotients are semistable by definition; construction
/// attaches that flag and rejects a quotient explicitly flagged otherwise.
/// Strict slope decrease is *not* enforced here; see validate_hn.
class HNProfile {
 public:
  explicit HNProfile(std::vector<BundleData> quotients);

  const std::vector<BundleData>& quotients() const { return quotients_; }
  std::size_t size() const { return quotients_.size(); }

  /// The first HN piece, i.e. the maximal destabilizing subsheaf.
  const BundleData& top() const { return quotients_.front(); }
  BundleData total() const { return direct_sum(quotients_); }

 private:
  std::vector<BundleData> quotients_;
};

struct HNValidation {
  bool valid = true;
  /// Index i of the first pair (i, i+1) whose slopes fail to decrease.
  std::optional<std::size_t> first_violation;
};

HNValidation validate_hn(const HNProfile& p);

/// Quotient-wise tensor with a semistable bundle. Throws on an invalid
/// profile or when `w` is not flagged semistable.
HNProfile tensor_hn(const HNProfile& p, const BundleData& w);

struct LatticePoint {
  std::int64_t rank;
  std::int64_t degree;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Cumulative (rank, degree) points starting at the origin.
std::vector<LatticePoint> hn_polygon(const HNProfile& p);

/// Segment slopes strictly decrease (the polygon is strictly concave).
/// Works on any point list, valid profile or not.
bool polygon_concave(const std::vector<LatticePoint>& points);

}  // namespace hodge
