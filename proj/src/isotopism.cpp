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

#include "atlas/isotopism.hpp"

#include <stdexcept>
#include <vector>

namespace atlas {

Isotopism::Isotopism(Permutation a, Permutation b, Permutation c)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  if (alpha.size() != beta.size() || alpha.size() != gamma.size()) {
    throw std::invalid_argument("isotopism components have different orders");
  }
}

Isotopism Isotopism::identity(int n) {
  return {Permutation::identity(n), Permutation::identity(n), Permutation::identity(n)};
}

Isotopism Isotopism::canonical(const StructureTriple& t) {
  return {canonical_perm(t.alpha()), canonical_perm(t.beta()), canonical_perm(t.gamma())};
}

const Permutation& Isotopism::component(int i) const {
  switch (i) {
    case 0: return alpha;
    case 1: return beta;
    case 2: return gamma;
    default: throw std::out_of_range("isotopism component index");
  }
}

bool Isotopism::is_trivial() const {
  return alpha.is_identity() && beta.is_identity() && gamma.is_identity();
}

Isotopism Isotopism::inverse() const { return {alpha.inverse(), beta.inverse(), gamma.inverse()}; }

StructureTriple Isotopism::structure() const {
  return {structure_of(alpha), structure_of(beta), structure_of(gamma)};
}

Isotopism operator*(const Isotopism& a, const Isotopism& b) {
  return {a.alpha * b.alpha, a.beta * b.beta, a.gamma * b.gamma};
}

Isotopism conjugate_isotopism(const Isotopism& theta, const RoleMap& sigma) {
  return {theta.component(sigma[0]), theta.component(sigma[1]), theta.component(sigma[2])};
}

Permutation cycle_matching(const Permutation& from, const Permutation& to) {
  if (from.size() != to.size()) throw std::invalid_argument("cycle matching across different orders");
  const CycleDecomposition a = decompose(from);
  const CycleDecomposition b = decompose(to);
  if (a.lengths() != b.lengths()) throw std::invalid_argument("cycle structures differ");
  std::vector<int> images(static_cast<std::size_t>(from.size()));
  for (std::size_t i = 0; i < a.cycles.size(); ++i) {
    for (std::size_t j = 0; j < a.cycles[i].size(); ++j) {
      images[static_cast<std::size_t>(a.cycles[i][j])] = b.cycles[i][j];
    }
  }
  return Permutation(std::move(images));
}

Isotopism conjugating_isotopism(const Isotopism& theta1, const Isotopism& theta2) {
  if (theta1.structure() != theta2.structure()) {
    throw std::invalid_argument("isotopisms have different cycle structures");
  }
  return {cycle_matching(theta1.alpha, theta2.alpha).inverse(),
          cycle_matching(theta1.beta, theta2.beta).inverse(),
          cycle_matching(theta1.gamma, theta2.gamma).inverse()};
}

Isotopism parse_isotopism(std::string_view text, int n) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw std::invalid_argument("isotopism needs three ';'-separated permutations");
  return {parse_permutation(parts[0], n), parse_permutation(parts[1], n), parse_permutation(parts[2], n)};
}

std::string format_isotopism(const Isotopism& theta) {
  return format_permutation(theta.alpha) + ";" + format_permutation(theta.beta) + ";" +
         format_permutation(theta.gamma);
}

}  // namespace atlas
