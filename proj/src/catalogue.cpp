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

#include "atlas/catalogue.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#ifndef ATLAS_DEFAULT_FIXTURES
#define ATLAS_DEFAULT_FIXTURES "data/reference_tables.json"
#endif

namespace atlas {

std::string_view entry_kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::kRealizableVerified: return "realizable";
    case EntryKind::kRejectedByFilters: return "rejected";
    case EntryKind::kRefutedBySearch: return "refuted";
    case EntryKind::kUndecided: return "undecided";
  }
  return "unknown";
}

namespace {

CatalogueEntry search_entry(int n, const StructureTriple& triple, const SearchOptions& search) {
  CatalogueEntry e;
  e.order = n;
  e.triple = triple;
  e.node_budget = search.budget.max_nodes;
  SearchOutcome outcome = exists_square(Isotopism::canonical(triple), search);
  e.nodes = outcome.nodes;
  e.elapsed_seconds = outcome.elapsed.count();
  switch (outcome.verdict) {
    case Verdict::kYes:
      e.kind = EntryKind::kRealizableVerified;
      e.witness = std::move(outcome.witness);
      break;
    case Verdict::kNo: e.kind = EntryKind::kRefutedBySearch; break;
    case Verdict::kTimeout: e.kind = EntryKind::kUndecided; break;
  }
  return e;
}

}  // namespace

std::vector<CatalogueEntry> classify(int n, const ClassifyOptions& options) {
  if (n < 2) throw std::invalid_argument("classification needs order >= 2");
  const std::vector<StructureTriple> classes = all_classes(n);
  std::vector<CatalogueEntry> entries(classes.size());
  std::vector<std::size_t> to_search;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto reports = reject(classes[i], options.filters);
    if (reports.empty()) {
      to_search.push_back(i);
      continue;
    }
    entries[i].order = n;
    entries[i].triple = classes[i];
    entries[i].kind = EntryKind::kRejectedByFilters;
    entries[i].reports = std::move(reports);
  }

  unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(to_search.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < to_search.size(); k = next++) {
      const std::size_t i = to_search[k];
      entries[i] = search_entry(n, classes[i], options.search);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  if (!options.include_rejected) {
    std::erase_if(entries, [](const CatalogueEntry& e) { return e.kind == EntryKind::kRejectedByFilters; });
  }
  return entries;
}

ReferenceTables ReferenceTables::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("fixture file must hold a JSON array");
  ReferenceTables tables;
  for (const auto& item : j) {
    ReferenceEntry e;
    e.order = item.at("n").get<int>();
    const auto& parts = item.at("triple");
    if (!parts.is_array() || parts.size() != 3) throw std::invalid_argument("fixture triple must have three parts");
    StructureTriple raw(CycleStructure(parts[0].get<std::vector<int>>()),
                        CycleStructure(parts[1].get<std::vector<int>>()),
                        CycleStructure(parts[2].get<std::vector<int>>()));
    if (raw.order() != e.order) {
      throw std::invalid_argument("fixture triple of order " + std::to_string(raw.order()) + " listed under n=" +
                                  std::to_string(e.order));
    }
    e.triple = canonical_class(raw);
    e.source = item.at("source").get<std::string>();
    if (e.source != "section-5" && e.source.rfind("table-", 0) != 0) {
      throw std::invalid_argument("unknown fixture source '" + e.source + "'");
    }
    tables.entries_.push_back(std::move(e));
  }
  return tables;
}

ReferenceTables ReferenceTables::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFixture("cannot open fixture file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument("malformed fixture file " + path.string() + ": " + ex.what());
  }
  return from_json(j);
}

std::filesystem::path ReferenceTables::default_path() {
  if (const char* env = std::getenv("ATLAS_FIXTURES"); env && *env) return env;
  return ATLAS_DEFAULT_FIXTURES;
}

bool ReferenceTables::has_order(int n) const {
  return std::any_of(entries_.begin(), entries_.end(), [n](const ReferenceEntry& e) { return e.order == n; });
}

std::vector<int> ReferenceTables::orders() const {
  std::set<int> s;
  for (const auto& e : entries_) s.insert(e.order);
  return {s.begin(), s.end()};
}

std::set<StructureTriple> ReferenceTables::realizable(int n) const {
  std::set<StructureTriple> out;
  for (const auto& e : entries_) {
    if (e.order == n && e.realizable()) out.insert(e.triple);
  }
  return out;
}

std::set<StructureTriple> ReferenceTables::refuted(int n) const {
  std::set<StructureTriple> out;
  for (const auto& e : entries_) {
    if (e.order == n && !e.realizable()) out.insert(e.triple);
  }
  return out;
}

CatalogueDiff diff_against_paper(int n, const std::vector<CatalogueEntry>& entries, const ReferenceTables& tables) {
  if (!tables.has_order(n)) throw MissingFixture("no reference data for order " + std::to_string(n));
  const auto realizable = tables.realizable(n);
  const auto refuted = tables.refuted(n);

  CatalogueDiff diff;
  diff.order = n;
  std::set<StructureTriple> computed;
  for (const auto& e : entries) {
    if (e.order != n || e.kind == EntryKind::kRejectedByFilters) continue;
    const StructureTriple cls = canonical_class(e.triple);
    computed.insert(cls);
    if (e.kind == EntryKind::kRealizableVerified) ++diff.realizable;
    if (e.kind == EntryKind::kRefutedBySearch) {
      ++diff.refuted;
      diff.refuted_by_search.push_back(cls);
    }
    const bool expect_yes = realizable.count(cls) > 0;
    const bool expect_no = refuted.count(cls) > 0;
    if (!expect_yes && !expect_no) {
      diff.extra.push_back(cls);
      continue;
    }
    const bool ok = expect_yes ? e.kind == EntryKind::kRealizableVerified : e.kind == EntryKind::kRefutedBySearch;
    if (!ok) {
      diff.mismatches.push_back({cls, expect_yes ? "realizable" : "refuted", std::string(entry_kind_name(e.kind))});
    }
  }
  for (const auto* expected : {&realizable, &refuted}) {
    for (const auto& cls : *expected) {
      if (!computed.count(cls)) diff.missing.push_back(cls);
    }
  }
  for (auto* v : {&diff.missing, &diff.extra, &diff.refuted_by_search}) {
    std::sort(v->begin(), v->end(), catalogue_less);
  }
  return diff;
}

namespace {

nlohmann::json witness_json(const LatinSquare& square) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < square.order(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < square.order(); ++j) row.push_back(square.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json triples_json(const std::vector<StructureTriple>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : v) out.push_back(to_json(t));
  return out;
}

}  // namespace

nlohmann::json to_json(const CatalogueEntry& entry, const OutputOptions& options) {
  nlohmann::json j = {{"n", entry.order},
                      {"triple", to_json(entry.triple)},
                      {"verdict", std::string(entry_kind_name(entry.kind))},
                      {"nodes", entry.nodes}};
  if (entry.kind == EntryKind::kUndecided) j["budget"] = entry.node_budget;
  if (options.include_timings) j["elapsed"] = entry.elapsed_seconds;
  if (options.include_witness && entry.witness) j["witness"] = witness_json(*entry.witness);
  if (!entry.reports.empty()) {
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& r : entry.reports) rules.push_back(to_json(r));
    j["rules"] = rules;
  }
  return j;
}

nlohmann::json catalogue_json(int n, const std::vector<CatalogueEntry>& entries, const OutputOptions& options) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries) list.push_back(to_json(e, options));
  return {{"schema", std::string(kSchema)}, {"n", n}, {"entries", list}};
}

std::string catalogue_csv(const std::vector<CatalogueEntry>& entries, const OutputOptions& options) {
  std::ostringstream out;
  out << "n,triple,verdict,nodes";
  if (options.include_timings) out << ",elapsed";
  if (options.include_witness) out << ",witness";
  out << '\n';
  for (const auto& e : entries) {
    out << e.order << ",\"" << format_triple(e.triple) << "\"," << entry_kind_name(e.kind) << ',' << e.nodes;
    if (options.include_timings) out << ',' << e.elapsed_seconds;
    if (options.include_witness) {
      out << ',';
      if (e.witness) {
        std::string rows = serialize_square(*e.witness);
        rows.pop_back();
        std::replace(rows.begin(), rows.end(), '\n', '/');
        out << '"' << rows << '"';
      }
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const CatalogueDiff& diff) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : diff.mismatches) {
    mismatches.push_back({{"triple", to_json(m.triple)}, {"expected", m.expected}, {"actual", m.actual}});
  }
  return {{"schema", std::string(kSchema)},
          {"n", diff.order},
          {"match", diff.empty()},
          {"realizable", diff.realizable},
          {"refuted", diff.refuted},
          {"missing", triples_json(diff.missing)},
          {"extra", triples_json(diff.extra)},
          {"mismatches", mismatches},
          {"refuted_by_search", triples_json(diff.refuted_by_search)}};
}

std::string catalogue_table(const std::vector<StructureTriple>& triples) {
  std::size_t width[3] = {7, 6, 7};
  for (const auto& t : triples) {
    for (int i = 0; i < 3; ++i) width[i] = std::max(width[i], format_structure(t[i]).size());
  }
  std::ostringstream out;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    out << a << std::string(width[0] - a.size() + 2, ' ') << b << std::string(width[1] - b.size() + 2, ' ') << c
        << '\n';
  };
  row("l_alpha", "l_beta", "l_gamma");
  for (const auto& t : triples) row(format_structure(t[0]), format_structure(t[1]), format_structure(t[2]));
  return out.str();
}

}  // namespace atlas
