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

#include "atlas/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace atlas {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on whitespace and commas; every token must be a non-negative integer.
std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) {
      throw std::invalid_argument(std::string(what) + ": unexpected character '" + c + "'");
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j) {
      throw std::invalid_argument(std::string(what) + ": integer out of range");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("permutation image " + std::to_string(v) + " outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (seen[static_cast<std::size_t>(v)]++) {
      throw std::invalid_argument("permutation image " + std::to_string(v) + " repeated");
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 0) throw std::invalid_argument("negative permutation order");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      if (x < 0 || x >= n) {
        throw std::invalid_argument("cycle element " + std::to_string(x) + " outside [0, " +
                                    std::to_string(n) + ")");
      }
      if (used[static_cast<std::size_t>(x)]++) {
        throw std::invalid_argument("cycle element " + std::to_string(x) + " appears twice");
      }
      images[static_cast<std::size_t>(x)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                               : static_cast<unsigned long long>(k);
  Permutation result = identity(size());
  while (e) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different order");
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) images[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(images));
}

std::vector<int> CycleDecomposition::lengths() const {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

CycleDecomposition decompose(const Permutation& p) {
  CycleDecomposition d;
  d.n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(d.n), 0);
  // Scanning by ascending start point makes every cycle begin at its minimum.
  for (int start = 0; start < d.n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    d.cycles.push_back(std::move(cycle));
  }
  std::stable_sort(d.cycles.begin(), d.cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return d;
}

Permutation recompose(const CycleDecomposition& d) { return Permutation::from_cycles(d.n, d.cycles); }

bool is_canonical(const CycleDecomposition& d) {
  std::vector<char> seen(static_cast<std::size_t>(std::max(d.n, 0)), 0);
  int total = 0;
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    const auto& c = d.cycles[i];
    if (c.empty()) return false;
    if (*std::min_element(c.begin(), c.end()) != c.front()) return false;
    for (int x : c) {
      if (x < 0 || x >= d.n || seen[static_cast<std::size_t>(x)]++) return false;
    }
    total += static_cast<int>(c.size());
    if (i > 0) {
      const auto& prev = d.cycles[i - 1];
      if (prev.size() < c.size()) return false;
      if (prev.size() == c.size() && prev.front() >= c.front()) return false;
    }
  }
  return total == d.n;
}

bool satisfies_counting_identities(std::span<const int> counts) {
  const long long n = static_cast<long long>(counts.size());
  long long k = 0;
  long long weight = 0;
  for (std::size_t r = 1; r <= counts.size(); ++r) {
    if (counts[r - 1] < 0) return false;
    k += counts[r - 1];
    weight += static_cast<long long>(r) * counts[r - 1];
  }
  if (weight != n) return false;
  // l_r <= min{k - sum_{i<r} l_i, (n - sum_{i<r} i*l_i) / r}
  long long cycles_before = 0;
  long long points_before = 0;
  for (std::size_t r = 1; r <= counts.size(); ++r) {
    const long long l = counts[r - 1];
    if (l > k - cycles_before) return false;
    if (l * static_cast<long long>(r) > n - points_before) return false;
    cycles_before += l;
    points_before += static_cast<long long>(r) * l;
  }
  return true;
}

CycleStructure::CycleStructure(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("cycle structure of order 0");
  if (!satisfies_counting_identities(counts_)) {
    throw std::invalid_argument("cycle structure " + format_structure(*this) +
                                " does not partition " + std::to_string(counts_.size()));
  }
}

CycleStructure CycleStructure::identity(int n) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  counts[0] = n;
  return CycleStructure(std::move(counts));
}

int CycleStructure::cycle_count() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::vector<int> CycleStructure::lengths_present() const {
  std::vector<int> out;
  for (int r = 1; r <= order(); ++r) {
    if (count(r) > 0) out.push_back(r);
  }
  return out;
}

CycleStructure structure_of(const Permutation& p) {
  std::vector<int> counts(static_cast<std::size_t>(p.size()), 0);
  for (const auto& c : decompose(p).cycles) ++counts[c.size() - 1];
  return CycleStructure(std::move(counts));
}

Permutation canonical_perm(const CycleStructure& cs) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int r = cs.order(); r >= 1; --r) {
    for (int c = 0; c < cs.count(r); ++c) {
      std::vector<int> cycle(static_cast<std::size_t>(r));
      std::iota(cycle.begin(), cycle.end(), next);
      next += r;
      cycles.push_back(std::move(cycle));
    }
  }
  return Permutation::from_cycles(cs.order(), cycles);
}

RoleMap inverse(const RoleMap& sigma) {
  RoleMap inv{};
  for (int i = 0; i < 3; ++i) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
  return inv;
}

std::string format_role_map(const RoleMap& sigma) {
  return std::to_string(sigma[0]) + std::to_string(sigma[1]) + std::to_string(sigma[2]);
}

StructureTriple::StructureTriple(CycleStructure alpha, CycleStructure beta, CycleStructure gamma)
    : parts{std::move(alpha), std::move(beta), std::move(gamma)} {
  if (parts[0].order() != parts[1].order() || parts[0].order() != parts[2].order()) {
    throw std::invalid_argument("structure triple components have different orders");
  }
}

bool StructureTriple::is_trivial() const {
  return parts[0].is_identity() && parts[1].is_identity() && parts[2].is_identity();
}

StructureTriple conjugate_triple(const StructureTriple& t, const RoleMap& sigma) {
  return StructureTriple(t[sigma[0]], t[sigma[1]], t[sigma[2]]);
}

namespace {

std::array<int, 3> cycle_counts(const StructureTriple& t) {
  return {t.alpha().cycle_count(), t.beta().cycle_count(), t.gamma().cycle_count()};
}

}  // namespace

bool catalogue_less(const StructureTriple& a, const StructureTriple& b) {
  const auto ka = cycle_counts(a);
  const auto kb = cycle_counts(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

StructureTriple canonical_class(const StructureTriple& t) {
  StructureTriple best = t;
  for (const auto& sigma : kAllRoleMaps) {
    StructureTriple c = conjugate_triple(t, sigma);
    if (catalogue_less(c, best)) best = std::move(c);
  }
  return best;
}

Permutation parse_permutation(std::string_view text, int n) {
  text = trim(text);
  if (text.empty() || text.front() != '(') {
    std::vector<int> images = parse_int_list(text, "permutation");
    if (n > 0 && static_cast<int>(images.size()) != n) {
      throw std::invalid_argument("one-line permutation has " + std::to_string(images.size()) +
                                  " entries, expected " + std::to_string(n));
    }
    if (images.empty()) return Permutation::identity(std::max(n, 0));
    return Permutation(std::move(images));
  }
  if (n <= 0) throw std::invalid_argument("cycle notation needs a known order");
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') {
      throw std::invalid_argument(std::string("permutation: expected '(' but found '") + text[i] + "'");
    }
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("permutation: unbalanced '('");
    std::vector<int> cycle = parse_int_list(text.substr(i + 1, close - i - 1), "permutation");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return Permutation::from_cycles(n, cycles);
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (const auto& c : decompose(p).cycles) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

CycleStructure parse_structure(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("cycle structure: unbalanced '('");
    text = text.substr(1, text.size() - 2);
  }
  return CycleStructure(parse_int_list(text, "cycle structure"));
}

std::string format_structure(const CycleStructure& cs) {
  std::string out = "(";
  for (int r = 1; r <= cs.order(); ++r) {
    if (r > 1) out += ',';
    out += std::to_string(cs.count(r));
  }
  return out + ")";
}

StructureTriple parse_triple(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '|') {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (pieces.size() != 3) throw std::invalid_argument("structure triple needs three '|'-separated parts");
  return StructureTriple(parse_structure(pieces[0]), parse_structure(pieces[1]),
                         parse_structure(pieces[2]));
}

std::string format_triple(const StructureTriple& t) {
  return format_structure(t.alpha()) + " " + format_structure(t.beta()) + " " +
         format_structure(t.gamma());
}

}  // namespace atlas
