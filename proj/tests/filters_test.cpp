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

#include "atlas/filters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

namespace atlas {
namespace {

bool fires(const std::vector<RejectionReport>& reports, Rule rule) {
  return std::any_of(reports.begin(), reports.end(), [rule](const RejectionReport& r) { return r.rule == rule; });
}

const RejectionReport* find(const std::vector<RejectionReport>& reports, Rule rule) {
  for (const auto& r : reports) {
    if (r.rule == rule) return &r;
  }
  return nullptr;
}

// Direct check of the orbit definition: along an orbit of length lcm(r, s)
// the symbol advances one step of a t-cycle per step, and no row (step mod r)
// or column (step mod s) may see the same symbol twice.
bool orbit_consistent(int r, int s, int t) {
  const int m = std::lcm(r, s);
  if (m % t != 0) return false;
  std::set<std::pair<int, int>> rows, cols;
  for (int k = 0; k < m; ++k) {
    if (!rows.insert({k % r, k % t}).second) return false;
    if (!cols.insert({k % s, k % t}).second) return false;
  }
  return true;
}

TEST_CASE("admissible lengths") {
  CHECK(admissible_lengths(4, 6).lengths == std::vector<int>{12});
  CHECK(admissible_lengths(4, 1).lengths == std::vector<int>{4});
  CHECK(admissible_lengths(1, 1).lengths == std::vector<int>{1});
  CHECK(admissible_lengths(2, 2).lengths == std::vector<int>{1, 2});
  CHECK(admissible_lengths(2, 3).lengths == std::vector<int>{6});
  CHECK(admissible_lengths(4, 6).contains(12));
  CHECK_FALSE(admissible_lengths(4, 6).contains(4));
}

TEST_CASE("admissible lengths match the orbit definition") {
  for (int r = 1; r <= 12; ++r) {
    for (int s = 1; s <= 12; ++s) {
      const AdmissibleSet set = admissible_lengths(r, s);
      for (int t = 1; t <= std::lcm(r, s); ++t) {
        CAPTURE(r);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(set.contains(t) == orbit_consistent(r, s, t));
      }
    }
  }
}

TEST_CASE("s_gamma keeps lengths present in gamma") {
  const CycleStructure gamma({0, 1, 0, 1, 0, 0});
  CHECK(s_gamma(2, 2, gamma) == std::vector<int>{2});
  CHECK(s_gamma(4, 1, gamma) == std::vector<int>{4});
  CHECK(s_gamma(1, 1, gamma).empty());
}

TEST_CASE("structure enumeration counts partitions") {
  CHECK(enumerate_structures(1).size() == 1);
  CHECK(enumerate_structures(4).size() == 5);
  CHECK(enumerate_structures(7).size() == 15);
  CHECK(enumerate_structures(11).size() == 56);
  const auto all = enumerate_structures(6);
  CHECK(std::set<CycleStructure>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("rule identifiers round-trip") {
  for (Rule rule : kAllRules) CHECK(parse_rule_id(rule_id(rule)) == rule);
  CHECK(rule_id(Rule::kRowCapacity) == "R-THM4");
  CHECK_THROWS_AS(parse_rule_id("R-NOPE"), std::invalid_argument);
}

TEST_CASE("row capacity rejects the worked example") {
  const StructureTriple t = parse_triple("0,1,0,1,0,0|6,0,0,0,0,0|0,1,0,1,0,0");
  const auto reports = reject(t);
  const RejectionReport* thm4 = find(reports, Rule::kRowCapacity);
  REQUIRE(thm4 != nullptr);
  CHECK(thm4->detail.find("r=4") != std::string::npos);
  CHECK(thm4->detail.find("t=4") != std::string::npos);
  for (const RoleMap& sigma : kAllRoleMaps) CHECK_FALSE(reject(conjugate_triple(t, sigma)).empty());
}

TEST_CASE("each rule has a triple it alone rejects") {
  struct Case {
    const char* triple;
    Rule rule;
  };
  const Case cases[] = {
      {"0,0,0,1|0,0,0,1|0,0,0,1", Rule::kEvenFullCycles},
      {"1,1,1,0,0,0|1,1,1,0,0,0|1,1,1,0,0,0", Rule::kAdmissibleLength},
      {"0,1,0,0,0,1,0,0|0,1,0,0,0,1,0,0|5,0,1,0,0,0,0,0", Rule::kRowCapacity},
      {"0,1,0,1,0,0|0,1,0,1,0,0|0,1,0,1,0,0", Rule::kPrimeCycles},
  };
  for (const auto& c : cases) {
    CAPTURE(c.triple);
    const auto reports = reject(parse_triple(c.triple));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].rule == c.rule);
    FilterOptions without;
    without.disabled.insert(c.rule);
    CHECK(reject(parse_triple(c.triple), without).empty());
  }
}

TEST_CASE("rules on a small mixed triple") {
  const auto reports = reject(parse_triple("0,1|2,0|2,0"));
  for (Rule rule : {Rule::kFixedPointCases, Rule::kIdentityComponent, Rule::kFixedPointPartners,
                    Rule::kTwoFixedComponents, Rule::kSymbolLengthDivides, Rule::kAdmissibleLength}) {
    CHECK(fires(reports, rule));
  }
  std::set<Rule> seen;
  for (const auto& r : reports) CHECK(seen.insert(r.rule).second);
}

TEST_CASE("trivial triple is not a candidate") {
  CHECK_THROWS_AS(reject(parse_triple("3,0,0|3,0,0|3,0,0")), std::invalid_argument);
}

TEST_CASE("class and candidate counts") {
  const int expected[] = {0, 0, 1, 3, 8, 5, 20, 9, 36, 22, 40};
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(candidates(n).size() == static_cast<std::size_t>(expected[n]));
  }
  const auto classes = all_classes(4);
  const std::size_t p = enumerate_structures(4).size();
  CHECK(classes.size() == p * (p + 1) * (p + 2) / 6 - 1);
  CHECK(std::is_sorted(classes.begin(), classes.end(), catalogue_less));
  for (const auto& t : classes) CHECK(canonical_class(t) == t);
}

TEST_CASE("disabling every rule keeps every class") {
  FilterOptions none;
  none.disabled.insert(std::begin(kAllRules), std::end(kAllRules));
  CHECK(candidates(5, none) == all_classes(5));
}

TEST_CASE("rejection json") {
  const StructureTriple t = parse_triple("0,0,0,1|0,0,0,1|0,0,0,1");
  const auto j = rejection_json(t, reject(t));
  CHECK(j["triple"] == nlohmann::json::parse("[[0,0,0,1],[0,0,0,1],[0,0,0,1]]"));
  REQUIRE(j["rules"].size() == 1);
  CHECK(j["rules"][0]["rule"] == "R-PRP1A");
  CHECK(j["rules"][0]["sigma"] == "012");
}

}  // namespace
}  // namespace atlas
