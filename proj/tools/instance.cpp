#include "instance.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge::cli {

namespace {

const char* const kBodies[] = {"hodge_system", "griffiths_filtration",
                               "connection_pair", "hn_request"};

SearchSettings parse_search(const json::Json& j) {
  json::require_keys(j, {"constraint_mode", "subsheaf_mode", "budget"},
                     "search");
  SearchSettings s;
  if (j.contains("constraint_mode")) {
    if (!j["constraint_mode"].is_string())
      throw InvalidInput("constraint_mode: expected a string");
    s.mode = parse_constraint_mode(j["constraint_mode"].get<std::string>());
  }
  if (j.contains("subsheaf_mode")) {
    if (!j["subsheaf_mode"].is_string())
      throw InvalidInput("subsheaf_mode: expected a string");
    s.subsheaf = parse_subsheaf_mode(j["subsheaf_mode"].get<std::string>());
  }
  if (j.contains("budget")) {
    const auto b = json::int_field(j, "budget");
    if (b < 1) throw InvalidInput("budget must be positive");
    s.budget = static_cast<std::uint64_t>(b);
  }
  return s;
}

ConverseData parse_e0_data(const json::Json& j) {
  json::require_keys(j, {"hn", "equal_slope_subsheaf"}, "e0_data");
  ConverseData d;
  if (j.contains("hn")) d.e0_hn = json::hn_from_json(j["hn"]);
  if (j.contains("equal_slope_subsheaf"))
    d.e0_equal_slope_sub = json::bundle_from_json(j["equal_slope_subsheaf"]);
  return d;
}

}  // namespace

ConstraintMode parse_constraint_mode(const std::string& s) {
  if (s == "paper") return ConstraintMode::PaperMonotone;
  if (s == "conservative") return ConstraintMode::Conservative;
  throw InvalidInput("constraint mode must be 'paper' or 'conservative'");
}

SubsheafMode parse_subsheaf_mode(const std::string& s) {
  if (s == "semistable") return SubsheafMode::Semistable;
  if (s == "stable") return SubsheafMode::Stable;
  throw InvalidInput("subsheaf mode must be 'semistable' or 'stable'");
}

std::string InstanceDocument::kind() const { return kBodies[body.index()]; }

InstanceDocument parse_instance(const json::Json& j) {
  json::require_keys(j,
                     {"hodge_system", "griffiths_filtration",
                      "connection_pair", "hn_request", "search", "e0_data"},
                     "instance document");
  int bodies = 0;
  for (const char* key : kBodies) bodies += j.contains(key) ? 1 : 0;
  if (bodies != 1)
    throw InvalidInput(
        "instance document needs exactly one of hodge_system, "
        "griffiths_filtration, connection_pair, hn_request");

  auto build = [&]() -> decltype(InstanceDocument::body) {
    if (j.contains("hodge_system"))
      return json::system_from_json(j["hodge_system"]);
    if (j.contains("griffiths_filtration"))
      return json::filtration_from_json(j["griffiths_filtration"]);
    if (j.contains("connection_pair"))
      return json::connection_from_json(j["connection_pair"]);
    const auto& r = j["hn_request"];
    json::require_keys(r, {"profile", "tensor_with"}, "hn_request");
    if (!r.contains("profile") || !r.contains("tensor_with"))
      throw InvalidInput("hn_request needs profile and tensor_with");
    return HnRequest{json::hn_from_json(r["profile"]),
                     json::bundle_from_json(r["tensor_with"])};
  };

  InstanceDocument doc{build(), {}, {}};
  if (j.contains("search")) doc.search = parse_search(j["search"]);
  if (j.contains("e0_data")) doc.e0_data = parse_e0_data(j["e0_data"]);
  return doc;
}

InstanceDocument load_instance(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  json::Json j;
  try {
    j = json::Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(j);
}

}  // namespace hodge::cli
