#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "hodge/gallery.hpp"
#include "hodge/hn_profiles.hpp"
#include "hodge/hodge_system.hpp"
#include "hodge/oper.hpp"
#include "hodge/profile.hpp"
#include "hodge/search_oracle.hpp"

namespace hodge::json {

/// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

// Readers reject unknown keys, wrong types and values that fail the
// owning type's invariants; every failure is an InvalidInput.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const BundleData& b);
BundleData bundle_from_json(const Json& j);

Json to_json(const GeometricContext& c);
GeometricContext context_from_json(const Json& j);

/// [[rank, degree], ...]
Json to_json(const SubsystemProfile& p);
SubsystemProfile profile_from_json(const Json& j);

/// "isomorphisms" or {"declared": [profile, ...]}
Json to_json(const ThetaMode& t);
ThetaMode theta_from_json(const Json& j);

Json to_json(const HodgeSystem& s);
HodgeSystem system_from_json(const Json& j);

/// {"profile": ..., "slope": "p/q", "mu_total": "p/q"}
Json to_json(const Certificate& c);

Json to_json(const Verdict& v);

/// List of BundleData, top slope first.
Json to_json(const HNProfile& p);
HNProfile hn_from_json(const Json& j);

Json to_json(const std::vector<LatticePoint>& polygon);

Json to_json(const GriffithsFiltration& f);
GriffithsFiltration filtration_from_json(const Json& j);

Json to_json(const ConnectionPair& p);
ConnectionPair connection_from_json(const Json& j);

Json to_json(const MaxSlopeResult& r, const Rational& mu_total);

Json to_json(const GalleryEntry& e);

/// Throws InvalidInput if `j` is not an object or has a key outside
/// `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed,
                  const char* what);

std::int64_t int_field(const Json& j, const char* key);
bool bool_field(const Json& j, const char* key);

}  // namespace hodge::json
