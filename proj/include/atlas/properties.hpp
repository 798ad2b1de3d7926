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
// Randomized property suites over the core types, seeded for
// reproducibility.

#ifndef ATLAS_PROPERTIES_HPP_
#define ATLAS_PROPERTIES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "atlas/isotopism.hpp"
#include "atlas/latin_square.hpp"
#include "atlas/permutation.hpp"

namespace atlas {

Permutation random_permutation(int n, std::mt19937_64& rng);
Isotopism random_isotopism(int n, std::mt19937_64& rng);
// A uniformly random isotope of the cyclic square of order n.
LatinSquare random_isotope_of_cyclic(int n, std::mt19937_64& rng);
// A random isotopism of the same cycle structure as theta.
Isotopism random_relabelling(const Isotopism& theta, std::mt19937_64& rng);

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

PropertyResult check_permutation_roundtrips(std::uint64_t cases, std::uint64_t seed);
PropertyResult check_canonical_class(std::uint64_t cases, std::uint64_t seed);
PropertyResult check_apply_preserves_latin(std::uint64_t cases, std::uint64_t seed);
PropertyResult check_autotopism_closure(std::uint64_t cases, std::uint64_t seed);

std::vector<PropertyResult> run_property_suites(std::uint64_t cases, std::uint64_t seed);

}  // namespace atlas

#endif  // ATLAS_PROPERTIES_HPP_
