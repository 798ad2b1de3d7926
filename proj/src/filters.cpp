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
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace atlas {

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::kCountIdentity: return "R-LEM1";
    case Rule::kFixedPointCases: return "R-THM1";
    case Rule::kIdentityComponent: return "R-PRP1";
    case Rule::kEvenFullCycles: return "R-PRP1A";
    case Rule::kFixedPointPartners: return "R-PRP2";
    case Rule::kTwoFixedComponents: return "R-PRP3";
    case Rule::kSymbolLengthDivides: return "R-PRP4";
    case Rule::kAdmissibleLength: return "R-PRP5";
    case Rule::kRowCapacity: return "R-THM4";
    case Rule::kPrimeCycles: return "R-THM5";
  }
  return "R-UNKNOWN";
}

Rule parse_rule_id(std::string_view id) {
  for (Rule r : kAllRules) {
    if (rule_id(r) == id) return r;
  }
  throw std::invalid_argument("unknown rule id '" + std::string(id) + "'");
}

bool AdmissibleSet::contains(int t) const { return std::binary_search(lengths.begin(), lengths.end(), t); }

AdmissibleSet admissible_lengths(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("cycle lengths must be positive");
  AdmissibleSet out{r, s, {}};
  const int m = std::lcm(r, s);
  for (int t = 1; t <= m; ++t) {
    if (m % t != 0) continue;
    bool ok = true;
    for (int h = r; h < m && ok; h += r) ok = h % t != 0;
    for (int h = s; h < m && ok; h += s) ok = h % t != 0;
    if (ok) out.lengths.push_back(t);
  }
  return out;
}

std::vector<int> s_gamma(int r, int s, const CycleStructure& gamma) {
  std::vector<int> out;
  for (int t : admissible_lengths(r, s).lengths) {
    if (gamma.count(t) > 0) out.push_back(t);
  }
  return out;
}

namespace {

void partitions(int remaining, int max_part, std::vector<int>& counts, std::vector<CycleStructure>& out) {
  if (remaining == 0) {
    out.emplace_back(counts);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    ++counts[static_cast<std::size_t>(p - 1)];
    partitions(remaining - p, p, counts, out);
    --counts[static_cast<std::size_t>(p - 1)];
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

const char* role_name(int i) {
  static const char* const kNames[] = {"alpha", "beta", "gamma"};
  return kNames[i];
}

// Collects witness strings per rule for one conjugate.
class Findings {
 public:
  void add(Rule rule, std::string witness) { found_[rule].push_back(std::move(witness)); }
  const std::map<Rule, std::vector<std::string>>& all() const { return found_; }

 private:
  std::map<Rule, std::vector<std::string>> found_;
};

bool single_length_without_fixed_points(const CycleStructure& cs) {
  return cs.fixed_points() == 0 && cs.lengths_present().size() == 1;
}

void check_count_identity(const StructureTriple& x, Findings& f) {
  for (int i = 0; i < 3; ++i) {
    if (!satisfies_counting_identities(x[i].counts())) {
      f.add(Rule::kCountIdentity, std::string(role_name(i)) + " " + format_structure(x[i]) + " is not a partition");
    }
  }
}

void check_fixed_point_cases(const StructureTriple& x, int n, Findings& f) {
  const bool all_equal = x[0] == x[1] && x[1] == x[2];
  const int half = n / 2;
  const bool case_a = all_equal && x[0].fixed_points() >= 1 && x[0].fixed_points() <= half;
  bool case_b = false;
  for (int i = 0; i < 3; ++i) {
    const auto& o1 = x[(i + 1) % 3];
    const auto& o2 = x[(i + 2) % 3];
    if (x[i].fixed_points() >= 1 && o1 == o2 && o1.fixed_points() == 0) case_b = true;
  }
  const bool case_c = x[0].fixed_points() == 0 && x[1].fixed_points() == 0 && x[2].fixed_points() == 0;
  if (!case_a && !case_b && !case_c) {
    f.add(Rule::kFixedPointCases, "no case a/b/c holds; fixed points (" + std::to_string(x[0].fixed_points()) + "," +
                               std::to_string(x[1].fixed_points()) + "," + std::to_string(x[2].fixed_points()) +
                               ")");
  }
}

void check_identity_component(const StructureTriple& x, Findings& f) {
  for (int i = 0; i < 3; ++i) {
    if (!x[i].is_identity()) continue;
    const auto& o1 = x[(i + 1) % 3];
    const auto& o2 = x[(i + 2) % 3];
    if (!(o1 == o2 && single_length_without_fixed_points(o1))) {
      f.add(Rule::kIdentityComponent, std::string(role_name(i)) + " is the identity but " + format_structure(o1) +
                                          " and " +
                              format_structure(o2) + " are not equal single-length fixed-point-free structures");
    }
  }
}

void check_even_full_cycles(const StructureTriple& x, int n, Findings& f) {
  if (n % 2 == 0 && x[0].count(n) == 1 && x[1].count(n) == 1 && x[2].count(n) == 1) {
    f.add(Rule::kEvenFullCycles, "three " + std::to_string(n) + "-cycles with n even");
  }
}

void check_fixed_point_partners(const StructureTriple& x, int n, Findings& f) {
  for (int i = 0; i < 3; ++i) {
    if (x[i].fixed_points() == 0) continue;
    const auto& o1 = x[(i + 1) % 3];
    const auto& o2 = x[(i + 2) % 3];
    if (o1 != o2) {
      f.add(Rule::kFixedPointPartners, std::string(role_name(i)) + " has fixed points but " +
                                           role_name((i + 1) % 3) + " " +
                              format_structure(o1) + " differs from " + role_name((i + 2) % 3) + " " +
                              format_structure(o2));
    }
    if (x[i].fixed_points() > n / 2 && (o1.fixed_points() > 0 || o2.fixed_points() > 0)) {
      f.add(Rule::kFixedPointPartners, std::string(role_name(i)) + " has " + std::to_string(x[i].fixed_points()) +
                              " > n/2 fixed points but another component has fixed points");
    }
  }
}

void check_two_fixed_components(const StructureTriple& x, int n, Findings& f) {
  int with_fixed = 0;
  for (int i = 0; i < 3; ++i) with_fixed += x[i].fixed_points() > 0 ? 1 : 0;
  if (with_fixed < 2) return;
  const bool all_equal = x[0] == x[1] && x[1] == x[2];
  const int half = n / 2;
  const int k_max = half + ((n + 1) / 2) / 2;
  const int l1 = x[0].fixed_points();
  const int k = x[0].cycle_count();
  if (!(all_equal && l1 >= 1 && l1 <= half && k >= 2 && k <= k_max)) {
    f.add(Rule::kTwoFixedComponents, std::to_string(with_fixed) +
                            " components have fixed points but the structures are not equal with 1 <= l_1 <= " +
                            std::to_string(half) + " and 2 <= k <= " + std::to_string(k_max));
  }
}

void check_symbol_length_divides(const StructureTriple& x, Findings& f) {
  const auto rs = x.alpha().lengths_present();
  const auto ss = x.beta().lengths_present();
  for (int t : x.gamma().lengths_present()) {
    bool found = false;
    for (int r : rs) {
      for (int s : ss) found = found || std::lcm(r, s) % t == 0;
    }
    if (!found) f.add(Rule::kSymbolLengthDivides, "t=" + std::to_string(t) + " divides no lcm(r,s)");
  }
}

void check_admissible_length(const StructureTriple& x, int n, Findings& f) {
  for (int r : x.alpha().lengths_present()) {
    for (int s : x.beta().lengths_present()) {
      if (s_gamma(r, s, x.gamma()).empty()) {
        f.add(Rule::kAdmissibleLength,
              "r=" + std::to_string(r) + " s=" + std::to_string(s) + ": no admissible symbol length");
      }
      if (std::gcd(r, s) == 1) {
        const int m = r * s;
        if (m > n || x.gamma().count(m) == 0) {
          f.add(Rule::kAdmissibleLength, "r=" + std::to_string(r) + " s=" + std::to_string(s) + " coprime but l_" +
                                  std::to_string(m) + "^gamma=0");
        }
      }
    }
  }
}

void check_row_capacity(const StructureTriple& x, Findings& f) {
  const auto& a = x.alpha();
  const auto& b = x.beta();
  const auto& c = x.gamma();
  const auto rs = a.lengths_present();
  const auto ss = b.lengths_present();
  for (int t : c.lengths_present()) {
    const int capacity = t * c.count(t);
    const std::vector<int> only_t{t};
    for (int r : rs) {
      if (r > t) continue;
      for (int s : ss) {
        if (s > t) continue;
        int sum_beta = 0;
        for (int u : ss) {
          if (s_gamma(r, u, c) == only_t) sum_beta += u * b.count(u);
        }
        int sum_alpha = 0;
        for (int u : rs) {
          if (s_gamma(u, s, c) == only_t) sum_alpha += u * a.count(u);
        }
        if (sum_beta > capacity || sum_alpha > capacity) {
          f.add(Rule::kRowCapacity, "r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                                     ": sums (beta " + std::to_string(sum_beta) + ", alpha " +
                                     std::to_string(sum_alpha) + ") vs " + std::to_string(capacity));
        }
      }
    }
  }
}

void check_prime_cycles(const StructureTriple& x, int n, Findings& f) {
  const auto& a = x.alpha();
  const auto& b = x.beta();
  const auto& c = x.gamma();
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p) || a.count(p) * b.count(p) == 0) continue;
    const int most = std::max(a.count(p), b.count(p));
    const std::string tag = "p=" + std::to_string(p);
    if (c.fixed_points() < p * most && c.count(p) == 0) {
      f.add(Rule::kPrimeCycles, "(a) " + tag + ": l_1^gamma=" + std::to_string(c.fixed_points()) + " < " +
                                 std::to_string(p * most) + " and l_p^gamma=0");
    }
    if (c.fixed_points() == 0 && c.count(p) < most) {
      f.add(Rule::kPrimeCycles, "(b) " + tag + ": l_1^gamma=0 and l_p^gamma=" + std::to_string(c.count(p)) + " < " +
                                 std::to_string(most));
    }
    if (p == 2 && c.fixed_points() == 0 && c.count(2) == 1) {
      f.add(Rule::kPrimeCycles, "(c) p=2: l_1^gamma=0 and l_2^gamma=1");
    }
  }
}

Findings evaluate(const StructureTriple& x) {
  const int n = x.order();
  Findings f;
  check_count_identity(x, f);
  check_fixed_point_cases(x, n, f);
  check_identity_component(x, f);
  check_even_full_cycles(x, n, f);
  check_fixed_point_partners(x, n, f);
  check_two_fixed_components(x, n, f);
  check_symbol_length_divides(x, f);
  check_admissible_length(x, n, f);
  check_row_capacity(x, f);
  check_prime_cycles(x, n, f);
  return f;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

std::vector<CycleStructure> enumerate_structures(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<CycleStructure> out;
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  partitions(n, n, counts, out);
  return out;
}

std::vector<RejectionReport> reject(const StructureTriple& triple, const FilterOptions& options) {
  if (triple.is_trivial()) throw std::invalid_argument("the trivial triple is not classified");
  // One report per rule, attributed to the first conjugate (in kAllRoleMaps
  // order) on which it fires, with every witness found there.
  std::map<Rule, RejectionReport> first;
  for (const auto& sigma : kAllRoleMaps) {
    const Findings f = evaluate(conjugate_triple(triple, sigma));
    for (const auto& [rule, witnesses] : f.all()) {
      if (options.disabled.count(rule) || first.count(rule)) continue;
      first.emplace(rule, RejectionReport{rule, sigma, join(witnesses)});
    }
  }
  std::vector<RejectionReport> out;
  for (auto& [rule, report] : first) out.push_back(std::move(report));
  return out;
}

std::vector<StructureTriple> all_classes(int n) {
  const auto structures = enumerate_structures(n);
  std::vector<StructureTriple> out;
  // A conjugacy class is exactly a multiset of three structures.
  for (std::size_t i = 0; i < structures.size(); ++i) {
    for (std::size_t j = i; j < structures.size(); ++j) {
      for (std::size_t k = j; k < structures.size(); ++k) {
        StructureTriple t(structures[i], structures[j], structures[k]);
        if (t.is_trivial()) continue;
        out.push_back(canonical_class(t));
      }
    }
  }
  std::sort(out.begin(), out.end(), catalogue_less);
  return out;
}

std::vector<StructureTriple> candidates(int n, const FilterOptions& options) {
  std::vector<StructureTriple> out;
  for (auto& t : all_classes(n)) {
    if (reject(t, options).empty()) out.push_back(std::move(t));
  }
  return out;
}

nlohmann::json to_json(const StructureTriple& triple) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    j.push_back(std::vector<int>(triple[i].counts().begin(), triple[i].counts().end()));
  }
  return j;
}

nlohmann::json to_json(const RejectionReport& report) {
  return {{"rule", std::string(rule_id(report.rule))},
          {"sigma", format_role_map(report.sigma)},
          {"detail", report.detail}};
}

nlohmann::json rejection_json(const StructureTriple& triple, const std::vector<RejectionReport>& reports) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : reports) rules.push_back(to_json(r));
  return {{"triple", to_json(triple)}, {"rules", rules}};
}

}  // namespace atlas
