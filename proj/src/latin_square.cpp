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

#include "atlas/latin_square.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace atlas {

std::string latin_violation(int n, std::span<const int> cells) {
  if (n <= 0) return "order must be positive";
  if (cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    return "expected " + std::to_string(n * n) + " cells, got " + std::to_string(cells.size());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = cells[static_cast<std::size_t>(i * n + j)];
      if (v < 0 || v >= n) {
        return "symbol " + std::to_string(v) + " at row " + std::to_string(i) + ", column " +
               std::to_string(j) + " is outside [0, " + std::to_string(n) + ")";
      }
    }
  }
  std::vector<int> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n; ++j) {
      const int v = cells[static_cast<std::size_t>(i * n + j)];
      if (seen[static_cast<std::size_t>(v)] >= 0) {
        return "repeated symbol " + std::to_string(v) + " in row " + std::to_string(i) + " (columns " +
               std::to_string(seen[static_cast<std::size_t>(v)]) + " and " + std::to_string(j) + ")";
      }
      seen[static_cast<std::size_t>(v)] = j;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < n; ++i) {
      const int v = cells[static_cast<std::size_t>(i * n + j)];
      if (seen[static_cast<std::size_t>(v)] >= 0) {
        return "repeated symbol " + std::to_string(v) + " in column " + std::to_string(j) + " (rows " +
               std::to_string(seen[static_cast<std::size_t>(v)]) + " and " + std::to_string(i) + ")";
      }
      seen[static_cast<std::size_t>(v)] = i;
    }
  }
  return {};
}

LatinSquare::LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (std::string why = latin_violation(n_, cells_); !why.empty()) throw SquareError(why);
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw SquareError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(n));
    }
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return LatinSquare(n, std::move(cells));
}

LatinSquare LatinSquare::cyclic(int n) {
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
  }
  return LatinSquare(n, std::move(cells));
}

std::vector<std::array<int, 3>> LatinSquare::triples() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(cells_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back({i, j, at(i, j)});
  }
  return out;
}

namespace {

void require_same_order(const LatinSquare& square, const Isotopism& theta) {
  if (square.order() != theta.order()) {
    throw std::invalid_argument("square of order " + std::to_string(square.order()) +
                                " with isotopism of order " + std::to_string(theta.order()));
  }
}

}  // namespace

LatinSquare apply_isotopism(const LatinSquare& square, const Isotopism& theta) {
  require_same_order(square, theta);
  const int n = square.order();
  const Permutation gamma_inv = theta.gamma.inverse();
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells[static_cast<std::size_t>(i * n + j)] = gamma_inv(square.at(theta.alpha(i), theta.beta(j)));
    }
  }
  return LatinSquare(n, std::move(cells));
}

bool is_autotopism(const LatinSquare& square, const Isotopism& theta) {
  require_same_order(square, theta);
  const int n = square.order();
  // L(alpha(i), beta(j)) == gamma(L(i, j)) for every cell.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (square.at(theta.alpha(i), theta.beta(j)) != theta.gamma(square.at(i, j))) return false;
    }
  }
  return true;
}

LatinSquare conjugate_square(const LatinSquare& square, const RoleMap& sigma) {
  const int n = square.order();
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (const auto& x : square.triples()) {
    const int r = x[static_cast<std::size_t>(sigma[0])];
    const int c = x[static_cast<std::size_t>(sigma[1])];
    cells[static_cast<std::size_t>(r * n + c)] = x[static_cast<std::size_t>(sigma[2])];
  }
  return LatinSquare(n, std::move(cells));
}

std::uint64_t for_each_latin_square(int n, const std::function<bool(const LatinSquare&)>& visit) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("exhaustive enumeration supports orders 1.." +
                                std::to_string(kMaxEnumerationOrder));
  }
  const int cell_count = n * n;
  std::vector<int> cells(static_cast<std::size_t>(cell_count), -1);
  std::vector<unsigned> row_used(static_cast<std::size_t>(n), 0);
  std::vector<unsigned> col_used(static_cast<std::size_t>(n), 0);
  std::uint64_t visited = 0;
  bool stop = false;

  std::function<void(int)> fill = [&](int pos) {
    if (stop) return;
    if (pos == cell_count) {
      ++visited;
      if (!visit(LatinSquare(n, cells))) stop = true;
      return;
    }
    const int i = pos / n;
    const int j = pos % n;
    const unsigned blocked = row_used[static_cast<std::size_t>(i)] | col_used[static_cast<std::size_t>(j)];
    for (int v = 0; v < n && !stop; ++v) {
      const unsigned bit = 1U << v;
      if (blocked & bit) continue;
      cells[static_cast<std::size_t>(pos)] = v;
      row_used[static_cast<std::size_t>(i)] |= bit;
      col_used[static_cast<std::size_t>(j)] |= bit;
      fill(pos + 1);
      row_used[static_cast<std::size_t>(i)] &= ~bit;
      col_used[static_cast<std::size_t>(j)] &= ~bit;
    }
    cells[static_cast<std::size_t>(pos)] = -1;
  };
  fill(0);
  return visited;
}

std::vector<LatinSquare> all_latin_squares(int n) {
  std::vector<LatinSquare> out;
  for_each_latin_square(n, [&](const LatinSquare& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

LatinSquare parse_square(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<int> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      int value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc() || ptr != line.data() + j) {
        throw SquareError("line " + std::to_string(line_no) + ": '" + std::string(line.substr(i, j - i)) +
                          "' is not an integer");
      }
      row.push_back(value);
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SquareError("no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw SquareError("ragged input: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " entries but there are " + std::to_string(rows.size()) + " rows");
    }
  }
  return LatinSquare::from_rows(rows);
}

std::string serialize_square(const LatinSquare& square) {
  std::ostringstream out;
  const int n = square.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << square.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace atlas
