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

#include <algorithm>
#include <map>
#include <numeric>

#include "atlas/filters.hpp"

namespace atlas {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Isotopism random_isotopism(int n, std::mt19937_64& rng) {
  Permutation a = random_permutation(n, rng);
  Permutation b = random_permutation(n, rng);
  return {a, b, random_permutation(n, rng)};
}

LatinSquare random_isotope_of_cyclic(int n, std::mt19937_64& rng) {
  return apply_isotopism(LatinSquare::cyclic(n), random_isotopism(n, rng));
}

Isotopism random_relabelling(const Isotopism& theta, std::mt19937_64& rng) {
  const Isotopism pi = random_isotopism(theta.order(), rng);
  return pi.inverse() * theta * pi;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Runs body once per case; a non-empty return string marks a failure.
template <typename Body>
PropertyResult run(std::string name, std::uint64_t cases, std::uint64_t seed, Body body) {
  PropertyResult result;
  result.name = std::move(name);
  std::mt19937_64 rng(seed);
  for (std::uint64_t c = 0; c < cases; ++c) {
    std::string failure;
    try {
      failure = body(rng);
    } catch (const std::exception& ex) {
      failure = std::string("exception: ") + ex.what();
    }
    ++result.cases;
    if (!failure.empty()) {
      if (result.failures++ == 0) result.first_failure = "case " + std::to_string(c) + ": " + failure;
    }
  }
  return result;
}

const std::vector<CycleStructure>& structures_of_order(int n) {
  static std::map<int, std::vector<CycleStructure>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_structures(n)).first;
  return it->second;
}

const std::vector<LatinSquare>& small_squares(int n) {
  static std::map<int, std::vector<LatinSquare>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all_latin_squares(n)).first;
  return it->second;
}

LatinSquare varied_square(int n, std::mt19937_64& rng) {
  if (n <= 4) {
    const auto& all = small_squares(n);
    return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
  }
  return random_isotope_of_cyclic(n, rng);
}

Isotopism translation(int n, int a, int b) {
  std::vector<int> x(static_cast<std::size_t>(n)), y(x.size()), z(x.size());
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = (i + a) % n;
    y[static_cast<std::size_t>(i)] = (i + b) % n;
    z[static_cast<std::size_t>(i)] = (i + a + b) % n;
  }
  return {Permutation(x), Permutation(y), Permutation(z)};
}

}  // namespace

PropertyResult check_permutation_roundtrips(std::uint64_t cases, std::uint64_t seed) {
  return run("permutation round-trips", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const int n = uniform(rng, 1, 16);
    const Permutation p = random_permutation(n, rng);
    const std::string text = format_permutation(p);
    const CycleDecomposition d = decompose(p);
    if (!is_canonical(d)) return "decomposition of " + text + " is not canonical";
    if (recompose(d) != p) return "recompose(decompose(p)) != p for " + text;
    if (parse_permutation(text, n) != p) return "parse(format(p)) != p for " + text;
    if (!(p * p.inverse()).is_identity() || !(p.inverse() * p).is_identity()) return "p * p^-1 != id for " + text;
    if (p.inverse().inverse() != p) return "double inverse differs for " + text;
    const CycleStructure cs = structure_of(p);
    if (structure_of(canonical_perm(cs)) != cs) return "canonical_perm changes structure of " + text;
    if (parse_structure(format_structure(cs)) != cs) return "structure text round-trip fails for " + text;
    const int k = uniform(rng, 0, 40);
    if (structure_of(p.pow(k)) != structure_of(canonical_perm(cs).pow(k))) {
      return "power structure depends on labelling for " + text;
    }
    return {};
  });
}

PropertyResult check_canonical_class(std::uint64_t cases, std::uint64_t seed) {
  return run("canonical class", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const int n = uniform(rng, 1, 9);
    const auto& all = structures_of_order(n);
    auto pick = [&] { return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))]; };
    const StructureTriple t(pick(), pick(), pick());
    const StructureTriple c = canonical_class(t);
    if (canonical_class(c) != c) return "not idempotent on " + format_triple(t);
    for (const RoleMap& sigma : kAllRoleMaps) {
      if (canonical_class(conjugate_triple(t, sigma)) != c) {
        return "conjugate " + format_role_map(sigma) + " of " + format_triple(t) + " changes class";
      }
    }
    const Isotopism theta = random_relabelling(Isotopism::canonical(t), rng);
    const RoleMap& sigma = kAllRoleMaps[static_cast<std::size_t>(uniform(rng, 0, 5))];
    if (conjugate_isotopism(theta, sigma).structure() != conjugate_triple(t, sigma)) {
      return "isotopism conjugate disagrees with triple conjugate for " + format_triple(t);
    }
    return {};
  });
}

PropertyResult check_apply_preserves_latin(std::uint64_t cases, std::uint64_t seed) {
  return run("apply preserves Latin", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const int n = uniform(rng, 1, 12);
    const LatinSquare square = varied_square(n, rng);
    const Isotopism a = random_isotopism(n, rng);
    const Isotopism b = random_isotopism(n, rng);
    const LatinSquare image = apply_isotopism(square, a);
    if (!latin_violation(n, image.cells()).empty()) return "image is not Latin under " + format_isotopism(a);
    if (apply_isotopism(image, a.inverse()) != square) return "inverse does not undo " + format_isotopism(a);
    if (apply_isotopism(image, b) != apply_isotopism(square, a * b)) return "apply is not an action";
    for (const RoleMap& sigma : kAllRoleMaps) {
      const LatinSquare conj = conjugate_square(image, sigma);
      if (!latin_violation(n, conj.cells()).empty()) return "conjugate " + format_role_map(sigma) + " is not Latin";
    }
    return {};
  });
}

PropertyResult check_autotopism_closure(std::uint64_t cases, std::uint64_t seed) {
  return run("autotopism group closure", cases, seed, [](std::mt19937_64& rng) -> std::string {
    const int n = uniform(rng, 2, 12);
    const Isotopism phi = random_isotopism(n, rng);
    const LatinSquare square = apply_isotopism(LatinSquare::cyclic(n), phi);
    auto autotopism = [&] {
      return phi.inverse() * translation(n, uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)) * phi;
    };
    const Isotopism a = autotopism();
    const Isotopism b = autotopism();
    if (!is_autotopism(square, a) || !is_autotopism(square, b)) return "transported translation is not an autotopism";
    if (!is_autotopism(square, Isotopism::identity(n))) return "identity is not an autotopism";
    if (!is_autotopism(square, a * b)) return "product of autotopisms is not an autotopism";
    if (!is_autotopism(square, a.inverse())) return "inverse of an autotopism is not an autotopism";
    const Isotopism x = random_isotopism(n, rng);
    if (!is_autotopism(square, x) && is_autotopism(square, a * x)) return "coset of a non-autotopism contains one";
    const Isotopism psi = random_isotopism(n, rng);
    if (!is_autotopism(apply_isotopism(square, psi), psi.inverse() * a * psi)) {
      return "autotopism does not transport along an isotopism";
    }
    return {};
  });
}

std::vector<PropertyResult> run_property_suites(std::uint64_t cases, std::uint64_t seed) {
  return {check_permutation_roundtrips(cases, seed), check_canonical_class(cases, seed + 1),
          check_apply_preserves_latin(cases, seed + 2), check_autotopism_closure(cases, seed + 3)};
}

}  // namespace atlas
