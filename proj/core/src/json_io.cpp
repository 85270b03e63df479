#include "hodge/json_io.hpp"

#include <algorithm>
#include <string>

#include "hodge/errors.hpp"

namespace hodge::json {

void require_keys(const Json& j, std::initializer_list<const char*> allowed,
                  const char* what) {
  if (!j.is_object())
    throw InvalidInput(std::string(what) + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return key == a; });
    if (!known)
      throw InvalidInput(std::string(what) + ": unknown field '" + key + "'");
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& v, const char* what) {
  if (!v.is_number_integer())
    throw InvalidInput(std::string(what) + ": expected an integer");
  return v.get<std::int64_t>();
}

bool as_bool(const Json& v, const char* what) {
  if (!v.is_boolean())
    throw InvalidInput(std::string(what) + ": expected a boolean");
  return v.get<bool>();
}

std::optional<bool> opt_bool(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as_bool(*it, key);
}

const Json& as_array(const Json& v, const char* what) {
  if (!v.is_array())
    throw InvalidInput(std::string(what) + ": expected an array");
  return v;
}

}  // namespace

std::int64_t int_field(const Json& j, const char* key) {
  return as_int(field(j, key), key);
}

bool bool_field(const Json& j, const char* key) {
  return as_bool(field(j, key), key);
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InvalidInput("rational: expected \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const BundleData& b) {
  Json j;
  j["rank"] = b.rank();
  j["degree"] = b.degree();
  if (b.semistable()) j["semistable"] = *b.semistable();
  if (b.stable()) j["stable"] = *b.stable();
  return j;
}

BundleData bundle_from_json(const Json& j) {
  require_keys(j, {"rank", "degree", "semistable", "stable"}, "bundle");
  return BundleData(int_field(j, "rank"), int_field(j, "degree"),
                    opt_bool(j, "semistable"), opt_bool(j, "stable"));
}

Json to_json(const GeometricContext& c) {
  Json j;
  j["characteristic"] = c.characteristic;
  j["dim"] = c.dim;
  j["omega_degree"] = c.omega_degree;
  j["omega_semistable"] = c.omega_semistable;
  j["omega_stable"] = c.omega_stable;
  return j;
}

GeometricContext context_from_json(const Json& j) {
  require_keys(j,
               {"characteristic", "dim", "omega_degree", "omega_semistable",
                "omega_stable"},
               "context");
  GeometricContext c;
  if (j.contains("characteristic"))
    c.characteristic = int_field(j, "characteristic");
  c.dim = int_field(j, "dim");
  c.omega_degree = int_field(j, "omega_degree");
  c.omega_semistable = opt_bool(j, "omega_semistable").value_or(true);
  c.omega_stable = opt_bool(j, "omega_stable").value_or(false);
  c.validate();
  return c;
}

Json to_json(const SubsystemProfile& p) {
  Json arr = Json::array();
  for (const auto& e : p.entries()) arr.push_back(Json::array({e.rank, e.degree}));
  return arr;
}

SubsystemProfile profile_from_json(const Json& j) {
  std::vector<ProfileEntry> entries;
  for (const auto& e : as_array(j, "profile")) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidInput("profile entry: expected [rank, degree]");
    entries.push_back({as_int(e[0], "profile rank"),
                       as_int(e[1], "profile degree")});
  }
  return SubsystemProfile(std::move(entries));
}

Json to_json(const ThetaMode& t) {
  if (std::holds_alternative<ThetaIsomorphisms>(t)) return "isomorphisms";
  Json arr = Json::array();
  for (const auto& p : std::get<ThetaDeclared>(t).invariant)
    arr.push_back(to_json(p));
  return Json{{"declared", arr}};
}

ThetaMode theta_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "isomorphisms")
      throw InvalidInput("theta: expected \"isomorphisms\" or {\"declared\"}");
    return ThetaIsomorphisms{};
  }
  require_keys(j, {"declared"}, "theta");
  ThetaDeclared declared;
  for (const auto& p : as_array(field(j, "declared"), "declared"))
    declared.invariant.push_back(profile_from_json(p));
  return declared;
}

Json to_json(const HodgeSystem& s) {
  Json comps = Json::array();
  for (const auto& c : s.components()) comps.push_back(to_json(c));
  Json j;
  j["context"] = to_json(s.context());
  j["components"] = comps;
  j["theta"] = to_json(s.theta());
  return j;
}

HodgeSystem system_from_json(const Json& j) {
  require_keys(j, {"context", "components", "theta"}, "hodge_system");
  std::vector<BundleData> comps;
  for (const auto& c : as_array(field(j, "components"), "components"))
    comps.push_back(bundle_from_json(c));
  ThetaMode theta = ThetaIsomorphisms{};
  if (j.contains("theta")) theta = theta_from_json(j["theta"]);
  return HodgeSystem(context_from_json(field(j, "context")), std::move(comps),
                     std::move(theta));
}

Json to_json(const Certificate& c) {
  Json j;
  j["profile"] = to_json(c.profile);
  j["slope"] = to_json(c.slope);
  j["mu_total"] = to_json(c.mu_total);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["semistable"] = to_string(v.semistable);
  j["stable"] = to_string(v.stable);
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  j["provenance"] = v.provenance;
  return j;
}

Json to_json(const HNProfile& p) {
  Json arr = Json::array();
  for (const auto& q : p.quotients()) arr.push_back(to_json(q));
  return arr;
}

HNProfile hn_from_json(const Json& j) {
  std::vector<BundleData> qs;
  for (const auto& q : as_array(j, "hn profile")) qs.push_back(bundle_from_json(q));
  return HNProfile(std::move(qs));
}

Json to_json(const std::vector<LatticePoint>& polygon) {
  Json arr = Json::array();
  for (const auto& p : polygon) arr.push_back(Json::array({p.rank, p.degree}));
  return arr;
}

Json to_json(const GriffithsFiltration& f) {
  Json graded = Json::array();
  for (const auto& g : f.graded()) graded.push_back(to_json(g));
  Json j;
  j["context"] = to_json(f.context());
  j["graded"] = graded;
  j["transversal"] = f.transversal();
  j["theta_squares_to_zero"] = f.theta_squares_to_zero();
  j["theta_iso"] = f.theta_iso();
  return j;
}

GriffithsFiltration filtration_from_json(const Json& j) {
  require_keys(j,
               {"context", "graded", "transversal", "theta_squares_to_zero",
                "theta_iso"},
               "griffiths_filtration");
  std::vector<BundleData> graded;
  for (const auto& g : as_array(field(j, "graded"), "graded"))
    graded.push_back(bundle_from_json(g));
  return GriffithsFiltration(context_from_json(field(j, "context")),
                             std::move(graded), bool_field(j, "transversal"),
                             bool_field(j, "theta_squares_to_zero"),
                             bool_field(j, "theta_iso"));
}

Json to_json(const ConnectionPair& p) {
  Json j;
  j["total"] = to_json(p.total());
  j["flat"] = p.flat();
  if (p.filtration()) j["filtration"] = to_json(*p.filtration());
  j["characteristic"] = p.characteristic();
  return j;
}

ConnectionPair connection_from_json(const Json& j) {
  require_keys(j, {"total", "flat", "filtration", "characteristic"},
               "connection_pair");
  std::optional<GriffithsFiltration> filtration;
  if (j.contains("filtration") && !j["filtration"].is_null())
    filtration = filtration_from_json(j["filtration"]);
  std::int64_t characteristic = 0;
  if (j.contains("characteristic"))
    characteristic = int_field(j, "characteristic");
  else if (filtration)
    characteristic = filtration->context().characteristic;
  return ConnectionPair(bundle_from_json(field(j, "total")),
                        bool_field(j, "flat"), std::move(filtration),
                        characteristic);
}

Json to_json(const MaxSlopeResult& r, const Rational& mu_total) {
  Json j;
  j["profile"] = to_json(r.profile);
  j["slope"] = to_json(r.slope);
  j["mu_total"] = to_json(mu_total);
  j["enumerated"] = r.enumerated;
  return j;
}

Json to_json(const GalleryEntry& e) {
  Json j;
  j["name"] = e.name;
  j["system"] = to_json(e.system);
  j["declared_subobject"] =
      e.declared_subobject ? to_json(*e.declared_subobject) : Json(nullptr);
  j["expected"] = to_json(e.expected);
  if (e.component_hn) j["component_hn"] = to_json(*e.component_hn);
  return j;
}

}  // namespace hodge::json
