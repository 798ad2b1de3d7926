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
//
// Classification of autotopism cycle structures per order, and comparison
// against the published reference catalogue shipped in
// data/reference_tables.json.

#ifndef ATLAS_CATALOGUE_HPP_
#define ATLAS_CATALOGUE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/filters.hpp"
#include "atlas/latin_square.hpp"
#include "atlas/permutation.hpp"
#include "atlas/solver.hpp"
#include "json.hpp"

namespace atlas {

enum class EntryKind { kRealizableVerified, kRejectedByFilters, kRefutedBySearch, kUndecided };

std::string_view entry_kind_name(EntryKind kind);

struct CatalogueEntry {
  int order = 0;
  StructureTriple triple;  // canonical class
  EntryKind kind = EntryKind::kUndecided;
  std::optional<LatinSquare> witness;    // kRealizableVerified
  std::vector<RejectionReport> reports;  // kRejectedByFilters
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = 0;
  double elapsed_seconds = 0.0;
};

struct ClassifyOptions {
  SearchOptions search;
  FilterOptions filters;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool include_rejected = false;
};

// Filters every class of order n, then searches each survivor on its
// canonical representative. Entries come back in catalogue order.
std::vector<CatalogueEntry> classify(int n, const ClassifyOptions& options = {});

class MissingFixture : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReferenceEntry {
  int order = 0;
  StructureTriple triple;  // canonical class
  std::string source;      // "table-K" or "section-5"

  bool realizable() const { return source != "section-5"; }
};

class ReferenceTables {
 public:
  static ReferenceTables from_json(const nlohmann::json& j);
  static ReferenceTables load(const std::filesystem::path& path);
  // $ATLAS_FIXTURES if set, else the copy in the source tree.
  static std::filesystem::path default_path();
  static ReferenceTables load_default() { return load(default_path()); }

  bool has_order(int n) const;
  std::vector<int> orders() const;
  // Classes expected to be realizable, and classes expected to be refuted by search.
  std::set<StructureTriple> realizable(int n) const;
  std::set<StructureTriple> refuted(int n) const;
  const std::vector<ReferenceEntry>& entries() const { return entries_; }

 private:
  std::vector<ReferenceEntry> entries_;
};

struct VerdictMismatch {
  StructureTriple triple;
  std::string expected;  // "realizable" | "refuted"
  std::string actual;    // entry_kind_name of the computed verdict
};

struct CatalogueDiff {
  int order = 0;
  std::vector<StructureTriple> missing;  // expected, absent from the computed candidates
  std::vector<StructureTriple> extra;    // computed candidates absent from the reference
  std::vector<VerdictMismatch> mismatches;
  std::vector<StructureTriple> refuted_by_search;  // informational
  std::size_t realizable = 0;
  std::size_t refuted = 0;

  bool empty() const { return missing.empty() && extra.empty() && mismatches.empty(); }
};

// Set comparison of canonical classes. Throws MissingFixture if the tables
// have no data for n.
CatalogueDiff diff_against_paper(int n, const std::vector<CatalogueEntry>& entries,
                                 const ReferenceTables& tables);

inline constexpr std::string_view kSchema = "atlas/1";

struct OutputOptions {
  bool include_timings = false;  // elapsed seconds are not reproducible
  bool include_witness = true;
};

nlohmann::json to_json(const CatalogueEntry& entry, const OutputOptions& options = {});
nlohmann::json catalogue_json(int n, const std::vector<CatalogueEntry>& entries, const OutputOptions& options = {});
std::string catalogue_csv(const std::vector<CatalogueEntry>& entries, const OutputOptions& options = {});
nlohmann::json to_json(const CatalogueDiff& diff);

// Rows of (l_alpha, l_beta, l_gamma) columns.
std::string catalogue_table(const std::vector<StructureTriple>& triples);

}  // namespace atlas

#endif  // ATLAS_CATALOGUE_HPP_
