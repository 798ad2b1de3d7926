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

#ifndef ATLAS_ISOTOPISM_HPP_
#define ATLAS_ISOTOPISM_HPP_

#include <string>
#include <string_view>

#include "atlas/permutation.hpp"

namespace atlas {

// (alpha, beta, gamma) permuting rows, columns and symbols.
//
// Composition is componentwise with the right operand applied first:
// (t1 * t2).alpha == t1.alpha * t2.alpha, and so on.
struct Isotopism {
  Permutation alpha;
  Permutation beta;
  Permutation gamma;

  Isotopism() = default;
  // Throws std::invalid_argument if the orders differ.
  Isotopism(Permutation a, Permutation b, Permutation c);

  static Isotopism identity(int n);
  // Built from canonical_perm of each component.
  static Isotopism canonical(const StructureTriple& t);

  int order() const { return alpha.size(); }
  const Permutation& component(int i) const;
  bool is_trivial() const;
  Isotopism inverse() const;
  StructureTriple structure() const;

  friend Isotopism operator*(const Isotopism& a, const Isotopism& b);
  friend bool operator==(const Isotopism&, const Isotopism&) = default;
};

// (pi_sigma(0), pi_sigma(1), pi_sigma(2)) of theta.
Isotopism conjugate_isotopism(const Isotopism& theta, const RoleMap& sigma);

// The map sending the j-th element of the i-th canonical cycle of `from` to
// the j-th element of the i-th canonical cycle of `to`. Throws
// std::invalid_argument if the cycle structures differ.
Permutation cycle_matching(const Permutation& from, const Permutation& to);

// An isotopism carrying LS(theta1) onto LS(theta2) under apply_isotopism.
// Its components are the inverses of the cycle matchings theta1 -> theta2.
// Throws std::invalid_argument on a structure mismatch.
Isotopism conjugating_isotopism(const Isotopism& theta1, const Isotopism& theta2);

// "alpha;beta;gamma", each part in cycle or one-line notation.
Isotopism parse_isotopism(std::string_view text, int n);
std::string format_isotopism(const Isotopism& theta);

}  // namespace atlas

#endif  // ATLAS_ISOTOPISM_HPP_
