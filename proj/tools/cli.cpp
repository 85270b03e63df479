#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "hodge/errors.hpp"
#include "hodge/gallery.hpp"
#include "hodge/inequalities.hpp"
#include "hodge/json_io.hpp"
#include "instance.hpp"

namespace hodge::cli {

namespace {

using json::Json;
using json::to_json;

struct Flags {
  std::string document;
  std::string mode;
  std::string subsheaf;
  std::uint64_t budget = 0;
  bool parallel = false;
  std::int64_t d_max = 6;
  std::int64_t n_max = 14;
  std::string gallery_name;
  std::int64_t g = 2;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> d0;
};

SearchOptions search_options(const InstanceDocument& doc, const Flags& f) {
  SearchOptions o;
  if (doc.search.mode) o.mode = *doc.search.mode;
  if (doc.search.subsheaf) o.subsheaf = *doc.search.subsheaf;
  if (doc.search.budget) o.budget = *doc.search.budget;
  if (!f.mode.empty()) o.mode = parse_constraint_mode(f.mode);
  if (!f.subsheaf.empty()) o.subsheaf = parse_subsheaf_mode(f.subsheaf);
  if (f.budget > 0) o.budget = f.budget;
  o.parallel = f.parallel;
  return o;
}

template <typename T>
const T& body_as(const InstanceDocument& doc, const char* command,
                 const char* expected) {
  if (const auto* p = std::get_if<T>(&doc.body)) return *p;
  throw InvalidInput(std::string(command) + " expects a " + expected +
                     " document, got " + doc.kind());
}

void put_verdict(Json& report, const Verdict& v) {
  const auto j = to_json(v);
  for (const auto& [k, val] : j.items()) report[k] = val;
}

void summarize(std::ostream& err, const std::string& what, const Verdict& v) {
  err << what << ": semistable=" << to_string(v.semistable)
      << " stable=" << to_string(v.stable);
  if (v.certificate)
    err << " certificate slope " << v.certificate->slope << " vs mu(E) "
        << v.certificate->mu_total;
  err << " [" << v.provenance << "]\n";
}

// Definite values from the criteria and the oracle must match.
void cross_check(const Verdict& criteria, const Verdict& oracle) {
  auto clash = [](Tri a, Tri b) {
    return a != Tri::Unknown && b != Tri::Unknown && a != b;
  };
  if (clash(criteria.semistable, oracle.semistable))
    throw Inconsistency("criteria say semistable=" +
                        to_string(criteria.semistable) + ", oracle says " +
                        to_string(oracle.semistable));
  if (clash(criteria.stable, oracle.stable))
    throw Inconsistency("criteria say stable=" + to_string(criteria.stable) +
                        ", oracle says " + to_string(oracle.stable));
}

bool oracle_applies(const HodgeSystem& sys, const SearchOptions& o) {
  return sys.isomorphisms() && sys.all_flagged_semistable() &&
         sys.context().omega_degree >= 0 &&
         search_space_size(sys) <= o.budget;
}

Verdict declared_verdict(const HodgeSystem& sys) {
  const auto& declared = std::get<ThetaDeclared>(sys.theta()).invariant;
  std::optional<Verdict> equal;
  for (const auto& p : declared) {
    auto v = check_declared(sys, p);
    if (v.semistable == Tri::No) return v;
    if (v.stable == Tri::No && !equal) equal = std::move(v);
  }
  if (equal) return *equal;
  Verdict v;
  v.provenance = declared.empty() ? "no invariant subobject declared"
                                  : "declared subobjects do not destabilize";
  return v;
}

Json cmd_check_system(const InstanceDocument& doc, const Flags& f,
                      std::ostream& err) {
  const auto& sys = body_as<HodgeSystem>(doc, "check-system", "hodge_system");
  Json report;
  report["command"] = "check-system";
  report["mu_total"] = to_json(total_slope(sys));

  if (!sys.isomorphisms()) {
    const auto v = declared_verdict(sys);
    put_verdict(report, v);
    summarize(err, "declared", v);
    return report;
  }

  auto v = criteria_verdict(sys, doc.e0_data);
  std::optional<Verdict> o;
  const auto opts = search_options(doc, f);
  if (oracle_applies(sys, opts)) {
    o = verdict_from_search(sys, opts);
    cross_check(v, *o);
    const bool negative = v.semistable == Tri::No || v.stable == Tri::No;
    if (negative && !v.certificate && o->certificate) {
      v.certificate = o->certificate;
      v.provenance += "; certificate from oracle";
    }
  }
  put_verdict(report, v);
  summarize(err, "criteria", v);
  if (o) {
    report["oracle"] = to_json(*o);
    summarize(err, "oracle", *o);
  }
  return report;
}

Json cmd_search(const InstanceDocument& doc, const Flags& f,
                std::ostream& err) {
  const auto& sys = body_as<HodgeSystem>(doc, "search", "hodge_system");
  const auto opts = search_options(doc, f);
  const auto mu = total_slope(sys);

  Json report;
  report["command"] = "search";
  report["constraint_mode"] = to_string(opts.mode);
  report["subsheaf_mode"] = to_string(opts.subsheaf);
  report["mu_total"] = to_json(mu);

  if (!sys.isomorphisms()) {
    const auto v = declared_verdict(sys);
    report["max_slope"] = nullptr;
    put_verdict(report, v);
    summarize(err, "declared", v);
    return report;
  }

  const auto best = max_slope_profile(sys, opts);
  report["max_slope"] = best ? to_json(*best, mu) : Json(nullptr);

  const auto v = verdict_from_search(sys, opts);
  put_verdict(report, v);
  summarize(err, "oracle", v);

  if (opts.mode == ConstraintMode::Conservative) {
    const auto cmp = compare_modes(sys, opts.subsheaf, opts.budget);
    Json c;
    c["paper_violates"] = cmp.paper_violates();
    c["conservative_violates"] = cmp.conservative_violates();
    c["discrepancy"] = cmp.discrepancy();
    report["mode_comparison"] = c;
    if (cmp.discrepancy())
      err << "DISCREPANCY: conservative profiles violate mu(E) but "
             "paper-monotone profiles do not\n";
  }

  if (sys.context().omega_degree >= 0) {
    const auto crit = criteria_verdict(sys, doc.e0_data);
    report["criteria"] = to_json(crit);
    cross_check(crit, v);
  }
  return report;
}

Json cmd_check_oper(const InstanceDocument& doc, std::ostream& err) {
  const auto& f =
      body_as<GriffithsFiltration>(doc, "check-oper", "griffiths_filtration");
  const auto check = is_generalized_oper(f);
  Json report;
  report["command"] = "check-oper";
  report["is_generalized_oper"] = check.is_oper;
  report["classical_oper"] = check.classical;
  report["reasons"] = check.reasons;
  report["graded_total"] = to_json(f.total());
  if (check.is_oper) {
    const auto v = oper_semistability(f);
    report["verdict"] = to_json(v);
    summarize(err, "generalized oper", v);
  } else {
    report["verdict"] = nullptr;
    err << "not a generalized oper:";
    for (const auto& r : check.reasons) err << " " << r << ";";
    err << "\n";
  }
  const auto hn = oper_hn_profile(f);
  report["hn_profile"] = hn ? to_json(*hn) : Json(nullptr);
  return report;
}

Json cmd_check_connection(const InstanceDocument& doc, std::ostream& err) {
  const auto& p =
      body_as<ConnectionPair>(doc, "check-connection", "connection_pair");
  Verdict graded;
  graded.provenance = "no graded verdict available";
  if (p.filtration() && p.filtration()->transversal() &&
      p.filtration()->theta_squares_to_zero()) {
    const auto sys = graded_of_filtration(*p.filtration());
    if (sys.isomorphisms() && sys.context().omega_degree >= 0)
      graded = criteria_verdict(sys);
  }
  const auto v = connection_verdict(p, graded);
  Json report;
  report["command"] = "check-connection";
  report["graded_verdict"] = to_json(graded);
  put_verdict(report, v);
  summarize(err, "connection", v);
  return report;
}

Json cmd_hn_tensor(const InstanceDocument& doc, std::ostream& err) {
  const auto& req = body_as<HnRequest>(doc, "hn-tensor", "hn_request");
  const auto check = validate_hn(req.profile);
  if (!check.valid)
    throw InvalidInput("HN profile slopes fail to decrease at index " +
                       std::to_string(*check.first_violation));
  const auto out = tensor_hn(req.profile, req.tensor_with);
  const std::vector<BundleData> parts = req.profile.quotients();
  Json report;
  report["command"] = "hn-tensor";
  report["valid"] = true;
  report["input_polygon"] = to_json(hn_polygon(req.profile));
  report["tensored"] = to_json(out);
  report["polygon"] = to_json(hn_polygon(out));
  report["total"] = to_json(tensor(direct_sum(parts), req.tensor_with));
  err << "tensored " << out.size() << " HN pieces by (" << req.tensor_with.rank()
      << ", " << req.tensor_with.degree() << ")\n";
  return report;
}

Json cmd_verify_inequalities(const Flags& f, std::ostream& err) {
  const auto rows = sweep_hodge_sum(f.d_max, f.n_max);
  Json report;
  report["command"] = "verify-inequalities";
  report["d_max"] = f.d_max;
  report["n_max"] = f.n_max;
  Json table = Json::array();
  bool all = true;
  err << "   d  checked  passed  equal\n";
  for (const auto& r : rows) {
    Json row;
    row["d"] = r.d;
    row["checked"] = r.checked;
    row["passed"] = r.passed;
    row["equalities"] = r.equalities;
    row["pass"] = r.passed == r.checked;
    table.push_back(row);
    all = all && r.passed == r.checked;
    err << "  " << (r.d < 10 ? " " : "") << r.d << "  " << r.checked << "  "
        << r.passed << "  " << r.equalities
        << (r.passed == r.checked ? "  PASS" : "  FAIL") << "\n";
  }
  report["rows"] = table;
  report["all_pass"] = all;
  if (!all) throw Inconsistency("power-sum inequality failed");
  return report;
}

Json cmd_gallery(const Flags& f, std::ostream& err) {
  const auto entry =
      make_gallery_entry(f.gallery_name, GalleryParams{f.g, f.d, f.d0});
  const auto got = reproduce(entry);
  const bool agree = verdicts_agree(entry.expected, got);
  Json report;
  report["command"] = "gallery";
  report["entry"] = to_json(entry);
  report["recomputed"] = to_json(got);
  report["agrees"] = agree;
  summarize(err, entry.name, got);
  if (!agree)
    throw Inconsistency("gallery entry '" + entry.name +
                        "' does not reproduce its expected verdict");
  return report;
}

Json error_report(const std::string& command, const std::string& kind,
                  const std::string& message) {
  Json j;
  j["command"] = command;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Slope-stability calculus for systems of Hodge bundles"};
  app.require_subcommand(1);
  Flags f;

  auto* check_system =
      app.add_subcommand("check-system", "criteria verdict for a hodge_system");
  auto* search =
      app.add_subcommand("search", "brute-force oracle verdict + certificate");
  auto* check_oper =
      app.add_subcommand("check-oper", "generalized-oper recognition");
  auto* check_connection = app.add_subcommand(
      "check-connection", "semistability of a connection pair");
  auto* hn = app.add_subcommand("hn-tensor", "tensor an HN profile");
  auto* ineq = app.add_subcommand("verify-inequalities",
                                  "exhaustive power-sum inequality table");
  auto* gallery = app.add_subcommand("gallery", "worked examples");

  for (auto* sub : {check_system, search, check_oper, check_connection, hn}) {
    sub->add_option("document", f.document, "instance JSON ('-' for stdin)")
        ->required();
  }
  for (auto* sub : {check_system, search}) {
    sub->add_option("--mode", f.mode, "paper | conservative");
    sub->add_option("--subsheaf", f.subsheaf, "semistable | stable");
    sub->add_option("--budget", f.budget, "maximum search-space size");
    sub->add_flag("--parallel", f.parallel, "split the search over threads");
  }
  ineq->add_option("--d-max", f.d_max, "largest d")->check(CLI::PositiveNumber);
  ineq->add_option("--n-max", f.n_max, "largest n")->check(CLI::NonNegativeNumber);
  gallery->add_option("name", f.gallery_name)
      ->required()
      ->check(CLI::IsMember(gallery_names()));
  gallery->add_option("--g", f.g, "genus");
  gallery->add_option("--d", f.d, "deg L_0 (surjective-not-iso)");
  gallery->add_option("--d0", f.d0, "deg L_0 (injective/unstable examples)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_report("", "invalid-input", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    Json report;
    if (chosen == ineq) {
      report = cmd_verify_inequalities(f, err);
    } else if (chosen == gallery) {
      report = cmd_gallery(f, err);
    } else {
      const auto doc = load_instance(f.document);
      if (chosen == check_system) report = cmd_check_system(doc, f, err);
      else if (chosen == search) report = cmd_search(doc, f, err);
      else if (chosen == check_oper) report = cmd_check_oper(doc, err);
      else if (chosen == check_connection) report = cmd_check_connection(doc, err);
      else report = cmd_hn_tensor(doc, err);
    }
    out << report.dump(2) << "\n";
    return kOk;
  } catch (const Inconsistency& e) {
    out << error_report(command, "inconsistency", e.what()).dump(2) << "\n";
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const InvalidInput& e) {
    out << error_report(command, "invalid-input", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    out << error_report(command, "invalid-input", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace hodge::cli
