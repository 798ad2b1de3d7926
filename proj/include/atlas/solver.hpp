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
// Exhaustive search for Latin squares fixed by an isotopism.
//
// A square L is fixed by (alpha, beta, gamma) iff L(alpha^k(i), beta^k(j)) =
// gamma^k(L(i, j)) for all k, so the symbol chosen for one cell of an orbit
// of (i, j) -> (alpha(i), beta(j)) determines the whole orbit. The search
// branches on (orbit, representative symbol) pairs. The (row, symbol) and
// (column, symbol) incidences of a fixed square fall into orbits as well,
// and each consistent branch covers
// exactly one cell orbit, one (row, symbol) orbit and one (column, symbol)
// orbit. That exact-cover problem is solved with dancing links, always
// branching on the item with the fewest remaining options.

#ifndef ATLAS_SOLVER_HPP_
#define ATLAS_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "atlas/isotopism.hpp"
#include "atlas/latin_square.hpp"

namespace atlas {

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellOrbit {
  Cell representative;               // row-major first cell of the orbit
  int length = 0;                    // lcm(row_cycle_length, col_cycle_length)
  int row_cycle_length = 0;
  int col_cycle_length = 0;
  std::vector<Cell> cells;           // cells[k] = (alpha^k(i), beta^k(j))
};

// Orbits of the cell grid, ordered by representative (row-major).
std::vector<CellOrbit> cell_orbits(const Isotopism& theta);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ULL;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
  std::chrono::milliseconds max_time{0};  // zero means no wall-clock limit
};

struct SearchOptions {
  SearchBudget budget;
  // Offer a representative only symbols whose gamma-cycle length is
  // admissible for the orbit. With pruning off every symbol is offered and
  // inconsistent choices are discarded when tried.
  bool symbol_pruning = true;
  // Existence searches only: among options that differ just in which
  // still-unused cycle of a given length they draw a symbol, column or row
  // from, try one. Counting always explores every option.
  bool symmetry_breaking = true;
  // Existence searches first run the cell-orbit engine for at most this many
  // nodes. If it is still undecided, the row-orbit engine gets the rest of
  // the budget, provided the number of row patterns stays within
  // max_row_patterns (zero disables it). Otherwise the cell-orbit engine
  // resumes with whatever budget is left.
  std::uint64_t cell_probe_nodes = 20'000'000ULL;
  std::uint64_t max_row_patterns = 4'000'000ULL;
};

enum class Verdict { kYes, kNo, kTimeout };

std::string_view verdict_name(Verdict v);

struct SearchOutcome {
  Verdict verdict = Verdict::kTimeout;
  std::optional<LatinSquare> witness;  // set iff verdict == kYes
  std::uint64_t nodes = 0;             // options tried
  std::chrono::duration<double> elapsed{};
};

class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

struct CountOutcome {
  std::optional<std::uint64_t> count;  // empty on timeout
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{};

  bool timed_out() const { return !count.has_value(); }
};

// Yes iff some Latin square is fixed by theta. No is only returned after
// the search space is exhausted.
SearchOutcome exists_square(const Isotopism& theta, const SearchOptions& options = {});

// The row-orbit engine on its own: every row of an alpha-cycle follows from
// the cycle's first row, so the search picks one admissible first row per
// alpha-cycle such that each (column, symbol) pair is used exactly once.
// Reports kTimeout when the order exceeds 64 or the admissible first rows
// outnumber options.max_row_patterns.
SearchOutcome exists_square_by_rows(const Isotopism& theta, const SearchOptions& options = {});

// Exact number of Latin squares fixed by theta. Throws CountOverflow if the
// count exceeds 64 bits.
CountOutcome count_squares(const Isotopism& theta, const SearchOptions& options = {});

// Independent check by filtering the full enumeration of LS(n), n <= 5.
std::uint64_t count_by_oracle(const Isotopism& theta);

}  // namespace atlas

#endif  // ATLAS_SOLVER_HPP_
