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
// Latin squares and the isotopism action on them.

#ifndef ATLAS_LATIN_SQUARE_HPP_
#define ATLAS_LATIN_SQUARE_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/isotopism.hpp"
#include "atlas/permutation.hpp"

namespace atlas {

// Raised for malformed square text and for arrays that are not Latin.
class SquareError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LatinSquare {
 public:
  LatinSquare() = default;

  // Row-major n*n symbols. Throws SquareError naming the first offending
  // row or column.
  LatinSquare(int n, std::vector<int> cells);
  static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

  // Cayley table of Z_n: cell (i, j) holds (i + j) mod n.
  static LatinSquare cyclic(int n);

  int order() const { return n_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * n_ + col)]; }
  std::span<const int> cells() const { return cells_; }

  // The n^2 orthogonal-array triples (row, col, symbol), row-major.
  std::vector<std::array<int, 3>> triples() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

// Empty string iff cells (row-major, n*n) form a Latin square; otherwise a
// diagnostic naming the first offending row or column.
std::string latin_violation(int n, std::span<const int> cells);

// result(i, j) = gamma^-1(L(alpha(i), beta(j))).
LatinSquare apply_isotopism(const LatinSquare& square, const Isotopism& theta);
bool is_autotopism(const LatinSquare& square, const Isotopism& theta);

// The square whose triple set is {(x[s0], x[s1], x[s2]) : x in L}.
LatinSquare conjugate_square(const LatinSquare& square, const RoleMap& sigma);

// Exhaustive row-by-row enumeration of LS(n) for 1 <= n <= kMaxEnumerationOrder.
// The visitor returns false to stop early. Returns the number of squares
// visited. Throws std::invalid_argument for larger n.
inline constexpr int kMaxEnumerationOrder = 5;
std::uint64_t for_each_latin_square(int n, const std::function<bool(const LatinSquare&)>& visit);
std::vector<LatinSquare> all_latin_squares(int n);

// n lines of n whitespace-separated symbols; '#' starts a comment.
LatinSquare parse_square(std::string_view text);
std::string serialize_square(const LatinSquare& square);

}  // namespace atlas

#endif  // ATLAS_LATIN_SQUARE_HPP_
