// Copyright 2026 The Atlas Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "atlas/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "atlas/catalogue.hpp"
#include "atlas/filters.hpp"
#include "atlas/isotopism.hpp"
#include "atlas/latin_square.hpp"
#include "atlas/properties.hpp"
#include "atlas/solver.hpp"

namespace atlas::cli {
namespace {

constexpr int kFastMaxOrder = 9;
constexpr int kTestedMaxOrder = 11;
constexpr std::uint64_t kSlowNodeBudget = 10'000'000'000ULL;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string command;
  int order = 0;
  std::string stage = "verified";
  std::string format = "text";
  std::string profile = "default";
  std::optional<std::uint64_t> budget;
  unsigned jobs = 0;
  bool timings = false;
  std::string square_path;
  std::string theta;
  std::string structure;
  std::string triple;
  std::uint64_t cases = 10'000;
  std::uint64_t seed = 1;
};

SearchOptions search_options(const Config& cfg) {
  SearchOptions options;
  options.budget.max_nodes = cfg.budget.value_or(cfg.profile == "slow" ? kSlowNodeBudget : kDefaultNodeBudget);
  return options;
}

void require_classifiable(const Config& cfg, std::ostream& err) {
  if (cfg.order < 2) throw UsageError("order must be at least 2");
  if (cfg.profile != "slow" && cfg.order > kFastMaxOrder) {
    throw UsageError("order " + std::to_string(cfg.order) + " needs --profile slow");
  }
  if (cfg.order > kTestedMaxOrder) {
    err << "warning: order " << cfg.order << " is experimental; no reference data exists beyond "
        << kTestedMaxOrder << "\n";
  }
}

LatinSquare read_square(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read square file " + path);
    buffer << in.rdbuf();
  }
  return parse_square(buffer.str());
}

std::size_t count_kind(const std::vector<CatalogueEntry>& entries, EntryKind kind) {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [kind](const CatalogueEntry& e) { return e.kind == kind; }));
}

int cmd_enumerate(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.order < 2) throw UsageError("order must be at least 2");
  if (cfg.stage == "filters") {
    const auto survivors = candidates(cfg.order);
    if (cfg.format == "json") {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& t : survivors) list.push_back(to_json(t));
      out << nlohmann::json{{"schema", std::string(kSchema)}, {"n", cfg.order}, {"stage", "filters"},
                            {"candidates", list}}
                 .dump(2)
          << "\n";
    } else if (cfg.format == "csv") {
      out << "n,triple\n";
      for (const auto& t : survivors) out << cfg.order << ",\"" << format_triple(t) << "\"\n";
    } else {
      out << catalogue_table(survivors);
      err << survivors.size() << " candidate classes\n";
    }
    return kExitOk;
  }

  require_classifiable(cfg, err);
  ClassifyOptions options;
  options.search = search_options(cfg);
  options.jobs = cfg.jobs;
  const auto entries = classify(cfg.order, options);
  const std::size_t undecided = count_kind(entries, EntryKind::kUndecided);
  OutputOptions output;
  output.include_timings = cfg.timings;
  if (cfg.format == "json") {
    auto j = catalogue_json(cfg.order, entries, output);
    j["stage"] = "verified";
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << catalogue_csv(entries, output);
  } else {
    std::vector<StructureTriple> realizable;
    for (const auto& e : entries) {
      if (e.kind == EntryKind::kRealizableVerified) realizable.push_back(e.triple);
    }
    out << catalogue_table(realizable);
    for (const auto& e : entries) {
      if (e.kind == EntryKind::kRefutedBySearch) err << "refuted by search: " << format_triple(e.triple) << "\n";
      if (e.kind == EntryKind::kUndecided) {
        err << "undecided after " << e.nodes << " nodes: " << format_triple(e.triple) << "\n";
      }
    }
    err << realizable.size() << " realizable, " << count_kind(entries, EntryKind::kRefutedBySearch)
        << " refuted, " << undecided << " undecided\n";
  }
  return undecided ? kExitBudget : kExitOk;
}

int cmd_diff_paper(const Config& cfg, std::ostream& out, std::ostream& err) {
  const ReferenceTables tables = ReferenceTables::load_default();
  if (!tables.has_order(cfg.order)) {
    throw MissingFixture("no reference data for order " + std::to_string(cfg.order));
  }
  require_classifiable(cfg, err);
  ClassifyOptions options;
  options.search = search_options(cfg);
  options.jobs = cfg.jobs;
  const auto entries = classify(cfg.order, options);
  const CatalogueDiff diff = diff_against_paper(cfg.order, entries, tables);
  out << to_json(diff).dump(2) << "\n";
  if (diff.empty()) return kExitOk;
  return count_kind(entries, EntryKind::kUndecided) ? kExitBudget : kExitFalse;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const LatinSquare square = read_square(cfg.square_path);
  const Isotopism theta = parse_isotopism(cfg.theta, square.order());
  const bool ok = is_autotopism(square, theta);
  out << (ok ? "autotopism" : "not an autotopism") << "\n";
  return ok ? kExitOk : kExitFalse;
}

int cmd_count(const Config& cfg, std::ostream& out, std::ostream& err) {
  Isotopism theta;
  if (!cfg.structure.empty()) {
    const StructureTriple t = parse_triple(cfg.structure);
    if (cfg.order && cfg.order != t.order()) {
      throw UsageError("structure has order " + std::to_string(t.order()) + ", --order says " +
                       std::to_string(cfg.order));
    }
    theta = Isotopism::canonical(t);
  } else {
    if (cfg.order < 1) throw UsageError("--theta needs --order");
    theta = parse_isotopism(cfg.theta, cfg.order);
  }
  const CountOutcome result = count_squares(theta, search_options(cfg));
  if (result.timed_out()) {
    err << "budget exhausted after " << result.nodes << " nodes (" << result.elapsed.count() << " s)\n";
    return kExitBudget;
  }
  if (cfg.format == "json") {
    nlohmann::json j = {{"schema", std::string(kSchema)},
                        {"n", theta.order()},
                        {"theta", format_isotopism(theta)},
                        {"count", *result.count},
                        {"nodes", result.nodes}};
    if (cfg.timings) j["elapsed"] = result.elapsed.count();
    out << j.dump(2) << "\n";
  } else {
    out << *result.count << "\n";
  }
  return kExitOk;
}

int cmd_apply(const Config& cfg, std::ostream& out) {
  const LatinSquare square = read_square(cfg.square_path);
  out << serialize_square(apply_isotopism(square, parse_isotopism(cfg.theta, square.order())));
  return kExitOk;
}

int cmd_explain(const Config& cfg, std::ostream& out) {
  const StructureTriple t = parse_triple(cfg.triple);
  if (t.is_trivial()) throw UsageError("the trivial triple is not a candidate");
  const auto reports = reject(t);
  out << rejection_json(t, reports).dump(2) << "\n";
  return reports.empty() ? kExitFalse : kExitOk;
}

int cmd_properties(const Config& cfg, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_property_suites(cfg.cases, cfg.seed)) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
        << " failures";
    if (!r.first_failure.empty()) out << " (" << r.first_failure << ")";
    out << "\n";
    all = all && r.passed();
  }
  return all ? kExitOk : kExitFalse;
}

void add_search_flags(CLI::App* sub, Config& cfg) {
  sub->add_option("--profile", cfg.profile, "Budget profile")->check(CLI::IsMember({"default", "slow"}));
  sub->add_option("--budget", cfg.budget, "Search nodes per candidate")->check(CLI::PositiveNumber);
  sub->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Cycle structures of Latin square autotopisms", "atlas"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List candidate or verified classes of one order");
  enumerate->add_option("order", cfg.order, "Order n")->required();
  enumerate->add_option("--stage", cfg.stage)->check(CLI::IsMember({"filters", "verified"}));
  enumerate->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->add_flag("--timings", cfg.timings, "Include elapsed seconds in json/csv output");
  add_search_flags(enumerate, cfg);

  auto* diff = app.add_subcommand("diff-paper", "Compare the computed catalogue with the reference tables");
  diff->add_option("order", cfg.order, "Order n")->required();
  add_search_flags(diff, cfg);

  auto* check = app.add_subcommand("check", "Test whether an isotopism is an autotopism of a square");
  check->add_option("--square", cfg.square_path, "Square file ('-' for stdin)")->required();
  check->add_option("--theta", cfg.theta, "alpha;beta;gamma in cycle notation")->required();

  auto* count = app.add_subcommand("count", "Count the Latin squares fixed by an isotopism");
  auto* theta_opt = count->add_option("--theta", cfg.theta, "alpha;beta;gamma in cycle notation");
  auto* structure_opt = count->add_option("--structure", cfg.structure, "l_alpha|l_beta|l_gamma");
  theta_opt->excludes(structure_opt);
  count->add_option("--order", cfg.order, "Order n");
  count->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  count->add_flag("--timings", cfg.timings);
  add_search_flags(count, cfg);

  auto* apply = app.add_subcommand("apply", "Print the image of a square under an isotopism");
  apply->add_option("--square", cfg.square_path, "Square file ('-' for stdin)")->required();
  apply->add_option("--theta", cfg.theta, "alpha;beta;gamma in cycle notation")->required();

  auto* explain = app.add_subcommand("explain", "Report the filter rules rejecting a structure triple");
  explain->add_option("triple", cfg.triple, "l_alpha|l_beta|l_gamma")->required();

  auto* properties = app.add_subcommand("properties", "Run the randomized property suites");
  properties->add_option("--cases", cfg.cases, "Cases per suite")->check(CLI::PositiveNumber);
  properties->add_option("--seed", cfg.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (theta_opt->count() == 0 && structure_opt->count() == 0 && count->parsed()) {
    err << "count: one of --theta or --structure is required\n";
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (diff->parsed()) return cmd_diff_paper(cfg, out, err);
    if (check->parsed()) return cmd_check(cfg, out);
    if (count->parsed()) return cmd_count(cfg, out, err);
    if (apply->parsed()) return cmd_apply(cfg, out);
    if (explain->parsed()) return cmd_explain(cfg, out);
    if (properties->parsed()) return cmd_properties(cfg, out);
  } catch (const MissingFixture& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingFixture;
  } catch (const CountOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\nrun 'atlas --help' for usage\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace atlas::cli
