#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fgt/fgt.hpp"

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kBudget = 3 };

struct CliConfig {
  std::size_t orderCap = 0;
  std::size_t latticeBudget = 0;
  unsigned parallelism = 0;
  std::string outputFormat = "json";
  std::string outputPath;
  bool timings = true;
};

void emit(const CliConfig& cfg, const std::string& doc) {
  std::cout << doc;
  if (!cfg.outputPath.empty()) {
    std::ofstream out(cfg.outputPath);
    if (!out) throw fgt::Error(fgt::ErrorCode::InvalidParameters, "cannot write " + cfg.outputPath);
    out << doc;
  }
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

using Analyzed = fgt::AnalyzedPtr;

Analyzed analyze_spec(const std::string& text) {
  const auto s = fgt::parse_group_spec_any(text);
  return fgt::analyze_group(fgt::catalog_build(s), fgt::to_string(s));
}

std::vector<fgt::Elem> parse_elements(const std::string& text, std::size_t order) {
  std::vector<fgt::Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    try {
      v = std::stoul(item);
    } catch (const std::exception&) {
      throw fgt::Error(fgt::ErrorCode::ParseError, "bad element index '" + item + "'");
    }
    if (v >= order) throw fgt::Error(fgt::ErrorCode::InvalidElement, "element " + item + " out of range");
    out.push_back(static_cast<fgt::Elem>(v));
  }
  return out;
}

using GroupPredicate = std::function<bool(const fgt::AnalyzedGroup&)>;
using SubgroupPredicate = std::function<bool(const fgt::AnalyzedGroup&, std::size_t)>;

const std::map<std::string, GroupPredicate>& group_predicates() {
  static const std::map<std::string, GroupPredicate> m = {
      {"is_abelian", [](const fgt::AnalyzedGroup& a) { return a.profile.abelian; }},
      {"is_dedekind", [](const fgt::AnalyzedGroup& a) { return a.profile.dedekind; }},
      {"is_nilpotent", [](const fgt::AnalyzedGroup& a) { return a.profile.nilpotent; }},
      {"is_solvable", [](const fgt::AnalyzedGroup& a) { return a.profile.solvable; }},
      {"is_supersolvable", [](const fgt::AnalyzedGroup& a) { return a.profile.supersolvable; }},
      {"is_metabelian", [](const fgt::AnalyzedGroup& a) { return a.profile.metabelian; }},
      {"is_t_group", [](const fgt::AnalyzedGroup& a) { return a.profile.tGroup; }},
      {"is_pnc", [](const fgt::AnalyzedGroup& a) { return a.profile.pnc; }},
      {"is_pe", [](const fgt::AnalyzedGroup& a) { return a.profile.pe; }},
      {"is_on", [](const fgt::AnalyzedGroup& a) { return a.profile.on; }},
      {"is_nsn", [](const fgt::AnalyzedGroup& a) { return a.profile.nsn; }},
      {"is_simple", [](const fgt::AnalyzedGroup& a) { return a.profile.simple; }},
  };
  return m;
}

const std::map<std::string, SubgroupPredicate>& subgroup_predicates() {
  static const std::map<std::string, SubgroupPredicate> m = {
      {"is_nc", [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_nc_subgroup(a.a(), i); }},
      {"is_ne", [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_ne_subgroup(a.a(), i); }},
      {"is_h", [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_h_subgroup(a.a(), i); }},
      {"is_pronormal", [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_pronormal(a.a(), i); }},
      {"is_normal", [](const fgt::AnalyzedGroup& a, std::size_t i) { return static_cast<bool>(a.lat().normal[i]); }},
      {"is_self_normalizing",
       [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_self_normalizing(a.a(), i); }},
      {"is_normally_embedded",
       [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_normally_embedded(a.lat(), i); }},
      {"is_subnormal",
       [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::is_subnormal(a.g(), a.a().sub(i)); }},
      {"on_condition",
       [](const fgt::AnalyzedGroup& a, std::size_t i) { return fgt::satisfies_on_condition(a.a(), i); }},
  };
  return m;
}

int cmd_catalog_list(const CliConfig& cfg) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream md;
  md << "| spec | order |\n|---|---|\n";
  for (const auto& s : fgt::default_catalog()) {
    nlohmann::ordered_json row{{"spec", fgt::to_string(s)}};
    try {
      row["order"] = fgt::catalog_build(s)->order;
    } catch (const fgt::Error& e) {
      if (e.code() != fgt::ErrorCode::BudgetExceeded) throw;
      row["order"] = nullptr;
      row["skipped"] = e.what();
    }
    md << "| " << row["spec"].get<std::string>() << " | " << (row["order"].is_null() ? "-" : row["order"].dump())
       << " |\n";
    rows.push_back(std::move(row));
  }
  emit(cfg, cfg.outputFormat == "markdown" ? md.str() : dump(rows));
  return kOk;
}

int cmd_group_info(const CliConfig& cfg, const std::string& text) {
  const auto ag = analyze_spec(text);
  nlohmann::ordered_json j;
  j["spec"] = ag->key;
  j["orderProfile"] = fgt::profile_to_json(fgt::order_fingerprint(ag->g()));
  j["predicateProfile"] = fgt::predicate_profile_to_json(ag->profile);
  emit(cfg, dump(j));
  return kOk;
}

int cmd_group_export(const CliConfig& cfg, const std::string& text) {
  emit(cfg, dump(fgt::group_export_json(*fgt::catalog_build(text))));
  return kOk;
}

int cmd_lattice(const CliConfig& cfg, const std::string& text, bool dot) {
  const auto lat = fgt::all_subgroups(fgt::catalog_build(text));
  emit(cfg, dot ? fgt::lattice_to_dot(*lat) : dump(fgt::lattice_to_json(*lat)));
  return kOk;
}

int cmd_predicate(const CliConfig& cfg, const std::string& name, const std::string& text,
                  const std::string& subgroup) {
  const auto ag = analyze_spec(text);
  bool value = false;
  if (auto it = group_predicates().find(name); it != group_predicates().end()) {
    if (!subgroup.empty()) throw fgt::Error(fgt::ErrorCode::InvalidParameters, name + " takes no subgroup");
    value = it->second(*ag);
  } else if (auto jt = subgroup_predicates().find(name); jt != subgroup_predicates().end()) {
    if (subgroup.empty()) throw fgt::Error(fgt::ErrorCode::InvalidParameters, name + " needs --subgroup");
    const auto h = fgt::generated(ag->g(), parse_elements(subgroup, ag->g().order));
    value = jt->second(*ag, ag->lat().index_of(h));
  } else {
    throw fgt::Error(fgt::ErrorCode::InvalidParameters, "unknown predicate " + name);
  }
  emit(cfg, value ? "true\n" : "false\n");
  return kOk;
}

int cmd_check(const CliConfig& cfg, const std::string& id, bool all, const std::string& reportPath) {
  if (all == !id.empty()) throw fgt::Error(fgt::ErrorCode::InvalidParameters, "give a claim id or --all");
  fgt::AnalysisCache cache;
  fgt::ClaimContext ctx{cache};
  std::vector<fgt::ClaimResult> results;
  if (all) {
    results = fgt::run_all_claims(ctx, cfg.parallelism);
  } else {
    results.push_back(fgt::run_claim(id, ctx));
  }
  const auto format = cfg.outputFormat == "markdown" ? fgt::ReportFormat::Markdown : fgt::ReportFormat::Json;
  emit(cfg, fgt::emit_report(results, format, cfg.timings));
  if (!reportPath.empty()) {
    std::ofstream out(reportPath);
    if (!out) throw fgt::Error(fgt::ErrorCode::InvalidParameters, "cannot write " + reportPath);
    out << fgt::emit_report(results, fgt::ReportFormat::Json, cfg.timings);
  }
  return fgt::any_asserted_failure(results) ? kClaimFailed : kOk;
}

int cmd_search(const CliConfig& cfg, const std::string& expr, const std::string& universe) {
  const auto e = fgt::parse_profile_expr(expr);
  const auto u = fgt::parse_universe(universe);
  fgt::AnalysisCache cache;
  const auto r = fgt::counterexample_search(e, u, cache);
  if (r.matches.empty() && !r.skipped.empty() && r.skipped.size() == u.size()) {
    throw fgt::Error(fgt::ErrorCode::BudgetExceeded, "no universe member fits the budget");
  }
  nlohmann::ordered_json matches = nlohmann::ordered_json::array();
  for (const auto& s : r.matches) matches.push_back(fgt::to_string(s));
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"group", s.group}, {"reason", s.reason}});
  emit(cfg, dump({{"expression", expr}, {"universeSize", u.size()}, {"matches", matches}, {"skipped", skipped}}));
  return kOk;
}

int exit_code_for(const fgt::Error& e) {
  return e.code() == fgt::ErrorCode::BudgetExceeded ? kBudget : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group toolkit: subgroup lattices, NC-type predicates and claim verification"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--order-cap", cfg.orderCap, "Largest group order to build (at most 5040)");
  app.add_option("--lattice-budget", cfg.latticeBudget, "Largest number of subgroups to enumerate");
  app.add_option("--parallelism", cfg.parallelism, "Worker threads for claim fan-out")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.outputFormat, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--output", cfg.outputPath, "Also write the output document to a file");
  bool noTimings = false;
  app.add_flag("--no-timings", noTimings, "Write elapsedMs as 0 for byte-identical reports");

  std::function<int()> action;

  auto* catalog = app.add_subcommand("catalog", "Catalog of named groups");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog specs with orders")->callback([&] {
    action = [&] { return cmd_catalog_list(cfg); };
  });

  auto* group = app.add_subcommand("group", "Inspect a group");
  group->require_subcommand(1);
  std::string groupSpec;
  auto* info = group->add_subcommand("info", "Order profile and predicate profile");
  info->add_option("spec", groupSpec, "GroupSpec string or JSON")->required();
  info->callback([&] { action = [&] { return cmd_group_info(cfg, groupSpec); }; });
  auto* exp = group->add_subcommand("export", "Cayley table export");
  exp->add_option("spec", groupSpec, "GroupSpec string or JSON")->required();
  exp->callback([&] { action = [&] { return cmd_group_export(cfg, groupSpec); }; });

  auto* lattice = app.add_subcommand("lattice", "Export the subgroup lattice");
  std::string latticeSpec;
  bool asDot = false;
  bool asJson = false;
  lattice->add_option("spec", latticeSpec, "GroupSpec string or JSON")->required();
  lattice->add_flag("--dot", asDot, "Graphviz Hasse diagram");
  lattice->add_flag("--json", asJson, "JSON lattice (default)");
  lattice->callback([&] { action = [&] { return cmd_lattice(cfg, latticeSpec, asDot && !asJson); }; });

  auto* predicate = app.add_subcommand("predicate", "Evaluate one predicate");
  std::string predName, predSpec, predSubgroup;
  predicate->add_option("name", predName, "Predicate name")->required();
  predicate->add_option("spec", predSpec, "GroupSpec string or JSON")->required();
  predicate->add_option("--subgroup", predSubgroup, "Comma-separated generator element indices");
  predicate->callback([&] { action = [&] { return cmd_predicate(cfg, predName, predSpec, predSubgroup); }; });

  auto* check = app.add_subcommand("check", "Run registered claims");
  std::string claimId, reportPath;
  bool all = false;
  check->add_option("id", claimId, "Claim id");
  check->add_flag("--all", all, "Run every claim");
  check->add_option("--report", reportPath, "Also write the JSON report to a file");
  check->callback([&] { action = [&] { return cmd_check(cfg, claimId, all, reportPath); }; });

  auto* search = app.add_subcommand("search", "Counterexample search over a universe");
  std::string expr, universe = "catalog";
  search->add_option("expr", expr, "Boolean expression over profile fields")->required();
  search->add_option("--universe", universe, "catalog, catalog<=N, Name(a..b) or comma-separated specs");
  search->callback([&] { action = [&] { return cmd_search(cfg, expr, universe); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    cfg.timings = !noTimings;
    if (cfg.orderCap) fgt::set_order_cap(cfg.orderCap);
    if (cfg.latticeBudget) {
      auto b = fgt::lattice_budget();
      b.maxSubgroups = cfg.latticeBudget;
      fgt::set_lattice_budget(b);
    }
    if (!cfg.parallelism) cfg.parallelism = std::max(1u, std::thread::hardware_concurrency());
    return action();
  } catch (const fgt::Error& e) {
    std::cerr << "fgt: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "fgt: " << e.what() << "\n";
    return kUsage;
  }
}
