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

#include "atlas/properties.hpp"

#include "atlas/solver.hpp"
#include "doctest.h"

namespace atlas {
namespace {

TEST_CASE("suites pass on a short run") {
  for (const auto& r : run_property_suites(300, 42)) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.cases == 300);
    CHECK(r.passed());
  }
}

TEST_CASE("suites are reproducible from the seed") {
  std::mt19937_64 a(9), b(9);
  CHECK(random_isotopism(8, a) == random_isotopism(8, b));
  CHECK(random_isotope_of_cyclic(6, a) == random_isotope_of_cyclic(6, b));
}

TEST_CASE("relabelling keeps the structure and the count") {
  std::mt19937_64 rng(3);
  const Isotopism theta = parse_isotopism("(0 1)(2 3);(0 1)(2 3);()", 4);
  for (int i = 0; i < 10; ++i) {
    const Isotopism other = random_relabelling(theta, rng);
    CHECK(other.structure() == theta.structure());
    CHECK(count_squares(other).count == count_squares(theta).count);
  }
}

}  // namespace
}  // namespace atlas
