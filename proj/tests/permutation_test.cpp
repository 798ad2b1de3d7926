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

#include <stdexcept>

#include "atlas/isotopism.hpp"
#include "doctest.h"

namespace atlas {
namespace {

CycleStructure cs(std::vector<int> counts) { return CycleStructure(std::move(counts)); }

TEST_CASE("permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({2, 0, 1}));
}

TEST_CASE("composition applies the right operand first") {
  const Permutation a = Permutation::from_cycles(3, {{0, 1}});
  const Permutation b = Permutation::from_cycles(3, {{1, 2}});
  const Permutation ab = a * b;
  CHECK(ab(1) == a(b(1)));
  CHECK(ab(0) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
}

TEST_CASE("decompose orders cycles by length then minimum") {
  const Permutation p = Permutation::from_cycles(7, {{5, 6}, {4, 1, 2}, {0, 3}});
  const CycleDecomposition d = decompose(p);
  REQUIRE(d.cycles.size() == 3);
  CHECK(d.cycles[0] == std::vector<int>{1, 2, 4});
  CHECK(d.cycles[1] == std::vector<int>{0, 3});
  CHECK(d.cycles[2] == std::vector<int>{5, 6});
  CHECK(is_canonical(d));
  CHECK(recompose(d) == p);
  CHECK(d.lengths() == std::vector<int>{3, 2, 2});
}

TEST_CASE("decompose keeps fixed points as 1-cycles") {
  const CycleDecomposition d = decompose(Permutation::from_cycles(4, {{1, 3}}));
  REQUIRE(d.cycles.size() == 3);
  CHECK(d.cycles[1] == std::vector<int>{0});
  CHECK(d.cycles[2] == std::vector<int>{2});
}

TEST_CASE("inverse and powers") {
  const Permutation p = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(2) == p * p);
  CHECK(p.pow(-1) == p.inverse());
  CHECK(structure_of(p.pow(2)) == cs({0, 0, 2, 0, 0, 0}));
  CHECK(structure_of(p.pow(3)) == cs({0, 3, 0, 0, 0, 0}));
}

TEST_CASE("cycle structures obey the counting identity") {
  CHECK_THROWS_AS(cs({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cs({0, 0, 0, -1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cs({}), std::invalid_argument);
  const CycleStructure c = cs({1, 0, 1, 0});
  CHECK(c.order() == 4);
  CHECK(c.fixed_points() == 1);
  CHECK(c.cycle_count() == 2);
  CHECK(c.lengths_present() == std::vector<int>{1, 3});
  CHECK_FALSE(c.is_identity());
  CHECK(CycleStructure::identity(5).is_identity());
}

TEST_CASE("canonical_perm lays cycles out longest first") {
  const Permutation p = canonical_perm(cs({1, 1, 1, 0, 0, 0}));
  CHECK(format_permutation(p) == "(0 1 2)(3 4)");
  CHECK(structure_of(p) == cs({1, 1, 1, 0, 0, 0}));
  CHECK(canonical_perm(CycleStructure::identity(3)).is_identity());
}

TEST_CASE("permutation text forms") {
  CHECK(parse_permutation("(0 1)(2 3)", 4) == Permutation({1, 0, 3, 2}));
  CHECK(parse_permutation("1,0,3,2", 4) == Permutation({1, 0, 3, 2}));
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("(1 2)", 4) == Permutation({0, 2, 1, 3}));
  CHECK(format_permutation(Permutation::identity(4)) == "()");
  CHECK(format_permutation(Permutation({1, 2, 0, 3})) == "(0 1 2)");
  CHECK_THROWS_AS(parse_permutation("(0 0)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(0 5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(a b)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(0 1)(1 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("0,1", 3), std::invalid_argument);
}

TEST_CASE("structure text forms") {
  CHECK(parse_structure("(0,3,0,0,0,0)") == cs({0, 3, 0, 0, 0, 0}));
  CHECK(parse_structure("0,3,0,0,0,0") == cs({0, 3, 0, 0, 0, 0}));
  CHECK(format_structure(cs({2, 1, 0, 0})) == "(2,1,0,0)");
  CHECK_THROWS_AS(parse_structure("(1,1)"), std::invalid_argument);
  const StructureTriple t = parse_triple("0,3,0,0,0,0|(0,0,2,0,0,0)|0,0,0,0,0,1");
  CHECK(t.gamma() == cs({0, 0, 0, 0, 0, 1}));
  CHECK(format_triple(t) == "(0,3,0,0,0,0) (0,0,2,0,0,0) (0,0,0,0,0,1)");
  CHECK_THROWS_AS(parse_triple("1,0|0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_triple("1,0|0,1|1,0,0"), std::invalid_argument);
}

TEST_CASE("role maps permute the triple") {
  const StructureTriple t(cs({0, 1, 0, 1, 0, 0}), cs({6, 0, 0, 0, 0, 0}), cs({0, 0, 2, 0, 0, 0}));
  for (const RoleMap& sigma : kAllRoleMaps) {
    const StructureTriple c = conjugate_triple(t, sigma);
    for (int i = 0; i < 3; ++i) CHECK(c[i] == t[sigma[static_cast<std::size_t>(i)]]);
    CHECK(conjugate_triple(c, inverse(sigma)) == t);
  }
  CHECK(format_role_map(kAllRoleMaps[0]) == "012");
  CHECK(format_role_map(kAllRoleMaps[5]) == "210");
}

TEST_CASE("canonical class is shared by all six conjugates") {
  const StructureTriple t(cs({0, 1, 0, 1, 0, 0}), cs({6, 0, 0, 0, 0, 0}), cs({0, 0, 2, 0, 0, 0}));
  const StructureTriple c = canonical_class(t);
  CHECK(canonical_class(c) == c);
  for (const RoleMap& sigma : kAllRoleMaps) CHECK(canonical_class(conjugate_triple(t, sigma)) == c);
  CHECK(c.alpha().cycle_count() <= c.beta().cycle_count());
  CHECK(c.beta().cycle_count() <= c.gamma().cycle_count());
}

TEST_CASE("trivial triple") {
  CHECK(StructureTriple(CycleStructure::identity(3), CycleStructure::identity(3), CycleStructure::identity(3))
            .is_trivial());
  CHECK_THROWS_AS(StructureTriple(CycleStructure::identity(3), CycleStructure::identity(4),
                                  CycleStructure::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("cycle matching carries cycles onto cycles") {
  const Permutation from = Permutation::from_cycles(5, {{3, 1, 4}, {0, 2}});
  const Permutation to = canonical_perm(structure_of(from));
  const Permutation m = cycle_matching(from, to);
  CHECK(m * from * m.inverse() == to);
  CHECK_THROWS_AS(cycle_matching(from, Permutation::identity(5)), std::invalid_argument);
}

}  // namespace
}  // namespace atlas
