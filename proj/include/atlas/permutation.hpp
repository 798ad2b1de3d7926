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
// Permutations of {0..n-1}, their canonical cycle decompositions and cycle
// structures, and the role-conjugation of structure triples.

#ifndef ATLAS_PERMUTATION_HPP_
#define ATLAS_PERMUTATION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

// A bijection on {0..n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless images is a bijection on
  // {0..images.size()-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  // Builds the permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  // (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Cycles sorted by non-increasing length, equal lengths by ascending first
// element, each cycle starting at its minimum. Fixed points are 1-cycles.
struct CycleDecomposition {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  std::vector<int> lengths() const;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition decompose(const Permutation& p);
Permutation recompose(const CycleDecomposition& d);

// True iff d satisfies the four ordering conditions of a canonical
// decomposition and its cycles partition {0..n-1}.
bool is_canonical(const CycleDecomposition& d);

// Cycle-length multiplicities (l_1, ..., l_n) of a permutation of order n.
class CycleStructure {
 public:
  CycleStructure() = default;

  // counts[r-1] is the number of r-cycles. Throws std::invalid_argument
  // unless sum r*counts[r-1] == counts.size().
  explicit CycleStructure(std::vector<int> counts);

  static CycleStructure identity(int n);

  int order() const { return static_cast<int>(counts_.size()); }

  // Number of cycles of length r; 0 outside [1, n].
  int count(int r) const {
    return r >= 1 && r <= order() ? counts_[static_cast<std::size_t>(r - 1)] : 0;
  }
  int fixed_points() const { return count(1); }
  int cycle_count() const;
  bool is_identity() const { return fixed_points() == order(); }

  // Cycle lengths present, ascending.
  std::vector<int> lengths_present() const;

  std::span<const int> counts() const { return counts_; }

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
  friend auto operator<=>(const CycleStructure&, const CycleStructure&) = default;

 private:
  std::vector<int> counts_;
};

// Checks the counting identities a-c satisfied by every cycle structure.
bool satisfies_counting_identities(std::span<const int> counts);

CycleStructure structure_of(const Permutation& p);

// Cycles laid out on consecutive integers, longest first.
Permutation canonical_perm(const CycleStructure& cs);

// A permutation of the three roles {row, column, symbol}.
using RoleMap = std::array<int, 3>;

inline constexpr std::array<RoleMap, 6> kAllRoleMaps = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

RoleMap inverse(const RoleMap& sigma);
std::string format_role_map(const RoleMap& sigma);

struct StructureTriple {
  std::array<CycleStructure, 3> parts;

  StructureTriple() = default;
  StructureTriple(CycleStructure alpha, CycleStructure beta, CycleStructure gamma);

  const CycleStructure& alpha() const { return parts[0]; }
  const CycleStructure& beta() const { return parts[1]; }
  const CycleStructure& gamma() const { return parts[2]; }
  const CycleStructure& operator[](int i) const { return parts[static_cast<std::size_t>(i)]; }

  int order() const { return parts[0].order(); }
  bool is_trivial() const;

  friend bool operator==(const StructureTriple&, const StructureTriple&) = default;
  friend auto operator<=>(const StructureTriple&, const StructureTriple&) = default;
};

// Component i of the result is component sigma[i] of t.
StructureTriple conjugate_triple(const StructureTriple& t, const RoleMap& sigma);

// Minimum conjugate under (k_alpha, k_beta, k_gamma), then the concatenated
// count vectors.
StructureTriple canonical_class(const StructureTriple& t);

// Strict weak order used for every printed catalogue.
bool catalogue_less(const StructureTriple& a, const StructureTriple& b);

// Text forms.
//   permutation: "(0 1)(2 3)", "()" for identity; one-line "1,0,3,2" accepted.
//   structure:   "0,3,0,0,0,0" or "(0,3,0,0,0,0)".
//   triple:      "la|lb|lc".
Permutation parse_permutation(std::string_view text, int n);
std::string format_permutation(const Permutation& p);
CycleStructure parse_structure(std::string_view text);
std::string format_structure(const CycleStructure& cs);
StructureTriple parse_triple(std::string_view text);
std::string format_triple(const StructureTriple& t);

}  // namespace atlas

#endif  // ATLAS_PERMUTATION_HPP_
