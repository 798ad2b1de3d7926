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
// Necessary conditions on the cycle structure of a non-trivial autotopism.
//
// Every rule is evaluated on all six role-conjugates of a triple, so the
// verdict is a property of the conjugacy class. A triple that fails any rule
// cannot be the cycle structure of an autotopism; passing all of them does
// not imply that one exists.

#ifndef ATLAS_FILTERS_HPP_
#define ATLAS_FILTERS_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/permutation.hpp"
#include "json.hpp"

namespace atlas {

enum class Rule {
  kCountIdentity,        // counting identities of a cycle structure
  kFixedPointCases,      // fixed-point trichotomy
  kIdentityComponent,    // an identity component forces equal single-length partners
  kEvenFullCycles,       // three n-cycles need n odd
  kFixedPointPartners,   // a fixed point forces the other two structures equal
  kTwoFixedComponents,   // fixed points in two components
  kSymbolLengthDivides,  // every symbol cycle length divides some lcm(r, s)
  kAdmissibleLength,     // every (r, s) pair has an admissible symbol length
  kRowCapacity,          // row capacity of single-length symbol classes
  kPrimeCycles,          // prime-length cycles
};

inline constexpr Rule kAllRules[] = {Rule::kCountIdentity,      Rule::kFixedPointCases,    Rule::kIdentityComponent,
                                     Rule::kEvenFullCycles,     Rule::kFixedPointPartners, Rule::kTwoFixedComponents,
                                     Rule::kSymbolLengthDivides, Rule::kAdmissibleLength,  Rule::kRowCapacity,
                                     Rule::kPrimeCycles};

// Stable identifiers: "R-LEM1", "R-THM1", "R-PRP1", ...
std::string_view rule_id(Rule rule);
Rule parse_rule_id(std::string_view id);

struct RejectionReport {
  Rule rule;
  RoleMap sigma;  // the conjugate on which the rule fired
  std::string detail;

  friend bool operator==(const RejectionReport&, const RejectionReport&) = default;
};

// Cycle lengths t admissible for the symbol at a cell whose row lies in an
// r-cycle and whose column lies in an s-cycle: t | m = lcm(r, s) and t
// divides no positive multiple of r or of s below m.
struct AdmissibleSet {
  int r = 0;
  int s = 0;
  std::vector<int> lengths;  // ascending

  bool contains(int t) const;
};

AdmissibleSet admissible_lengths(int r, int s);

// admissible_lengths(r, s) restricted to lengths present in gamma.
std::vector<int> s_gamma(int r, int s, const CycleStructure& gamma);

// All partitions of n in multiplicity form, each exactly once.
std::vector<CycleStructure> enumerate_structures(int n);

struct FilterOptions {
  std::set<Rule> disabled;
};

// One report per firing rule, attributed to the first conjugate in
// kAllRoleMaps order on which it fires. Empty means the triple passes.
// Throws std::invalid_argument for the trivial triple.
std::vector<RejectionReport> reject(const StructureTriple& triple, const FilterOptions& options = {});

// Canonical classes of all non-trivial triples of order n, in catalogue
// order.
std::vector<StructureTriple> all_classes(int n);

// Canonical classes that pass every enabled rule, in catalogue order.
std::vector<StructureTriple> candidates(int n, const FilterOptions& options = {});

nlohmann::json to_json(const RejectionReport& report);
nlohmann::json rejection_json(const StructureTriple& triple, const std::vector<RejectionReport>& reports);
nlohmann::json to_json(const StructureTriple& triple);

}  // namespace atlas

#endif  // ATLAS_FILTERS_HPP_
