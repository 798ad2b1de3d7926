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

#include "atlas/solver.hpp"

#include <algorithm>
#include <numeric>

#include "atlas/filters.hpp"
#include "row_cover.hpp"

namespace atlas {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kTimeout: return "timeout";
  }
  return "unknown";
}

namespace {

std::vector<int> cycle_lengths_by_point(const Permutation& p) {
  std::vector<int> len(static_cast<std::size_t>(p.size()));
  for (const auto& c : decompose(p).cycles) {
    for (int x : c) len[static_cast<std::size_t>(x)] = static_cast<int>(c.size());
  }
  return len;
}

std::vector<int> cycle_ids_by_point(const Permutation& p) {
  std::vector<int> id(static_cast<std::size_t>(p.size()));
  int next = 0;
  for (const auto& c : decompose(p).cycles) {
    for (int x : c) id[static_cast<std::size_t>(x)] = next;
    ++next;
  }
  return id;
}

// Labels the orbits of (x, y) -> (f(x), g(y)) on an n x n grid.
std::vector<int> pair_orbit_ids(const Permutation& f, const Permutation& g, int& orbit_count) {
  const int n = f.size();
  std::vector<int> id(static_cast<std::size_t>(n * n), -1);
  orbit_count = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (id[static_cast<std::size_t>(x * n + y)] >= 0) continue;
      int a = x;
      int b = y;
      while (id[static_cast<std::size_t>(a * n + b)] < 0) {
        id[static_cast<std::size_t>(a * n + b)] = orbit_count;
        a = f(a);
        b = g(b);
      }
      ++orbit_count;
    }
  }
  return id;
}

// Places gamma^k(symbol) on cell k of the orbit and reports whether the
// result is closed under the orbit and free of row and column repeats.
bool orbit_assignment_consistent(const CellOrbit& orbit, const Permutation& gamma, int symbol) {
  std::vector<int> symbols(orbit.cells.size());
  int v = symbol;
  for (std::size_t k = 0; k < orbit.cells.size(); ++k) {
    symbols[k] = v;
    v = gamma(v);
  }
  if (v != symbol) return false;
  for (std::size_t a = 0; a < orbit.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < orbit.cells.size(); ++b) {
      if (symbols[a] != symbols[b]) continue;
      if (orbit.cells[a].row == orbit.cells[b].row || orbit.cells[a].col == orbit.cells[b].col) return false;
    }
  }
  return true;
}

class SearchAborted {};

// Dancing links over options of exactly three items each.
class OrbitCover {
 public:
  OrbitCover(const Isotopism& theta, const SearchOptions& options)
      : theta_(theta), options_(options), start_(std::chrono::steady_clock::now()) {
    build();
  }

  // Returns false if the budget ran out.
  bool run(bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    symmetry_ = stop_at_first && options_.symmetry_breaking;
    try {
      search();
    } catch (const SearchAborted&) {
      return false;
    }
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t solutions() const { return solutions_; }
  const std::optional<LatinSquare>& witness() const { return witness_; }
  std::chrono::duration<double> elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  struct OptionInfo {
    int orbit;
    int symbol;
    bool consistent;
    // Cycles of alpha, beta and gamma met by the option's cells and symbols.
    int row_cycle;
    int col_cycle;
    int symbol_cycle;
  };

  enum class ItemKind { kCell, kRowSymbol, kColSymbol };

  void build() {
    const int n = theta_.order();
    orbits_ = cell_orbits(theta_);
    const auto symbol_cycle = cycle_lengths_by_point(theta_.gamma);
    const auto row_cycle_id = cycle_ids_by_point(theta_.alpha);
    const auto col_cycle_id = cycle_ids_by_point(theta_.beta);
    const auto symbol_cycle_id = cycle_ids_by_point(theta_.gamma);
    row_cycle_len_ = lengths_of_cycles(theta_.alpha);
    col_cycle_len_ = lengths_of_cycles(theta_.beta);
    symbol_cycle_len_ = lengths_of_cycles(theta_.gamma);
    row_touch_.assign(row_cycle_len_.size(), 0);
    col_touch_.assign(col_cycle_len_.size(), 0);
    symbol_touch_.assign(symbol_cycle_len_.size(), 0);

    int row_symbol_orbits = 0;
    int col_symbol_orbits = 0;
    const auto row_symbol_id = pair_orbit_ids(theta_.alpha, theta_.gamma, row_symbol_orbits);
    const auto col_symbol_id = pair_orbit_ids(theta_.beta, theta_.gamma, col_symbol_orbits);

    // Per-orbit offered symbols.
    const int orbit_count = static_cast<int>(orbits_.size());
    std::vector<std::vector<int>> offered(static_cast<std::size_t>(orbit_count));
    for (int o = 0; o < orbit_count; ++o) {
      const auto& orbit = orbits_[static_cast<std::size_t>(o)];
      const AdmissibleSet admissible = admissible_lengths(orbit.row_cycle_length, orbit.col_cycle_length);
      for (int s = 0; s < n; ++s) {
        if (!options_.symbol_pruning || admissible.contains(symbol_cycle[static_cast<std::size_t>(s)])) {
          offered[static_cast<std::size_t>(o)].push_back(s);
        }
      }
    }

    // Cell-orbit items in branching-priority order: fewest offered symbols,
    // then longest orbit, then representative.
    std::vector<int> order(static_cast<std::size_t>(orbit_count));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& oa = orbits_[static_cast<std::size_t>(a)];
      const auto& ob = orbits_[static_cast<std::size_t>(b)];
      const auto na = offered[static_cast<std::size_t>(a)].size();
      const auto nb = offered[static_cast<std::size_t>(b)].size();
      if (na != nb) return na < nb;
      if (oa.length != ob.length) return oa.length > ob.length;
      return oa.representative < ob.representative;
    });
    std::vector<int> orbit_item(static_cast<std::size_t>(orbit_count));
    for (int pos = 0; pos < orbit_count; ++pos) {
      orbit_item[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos + 1;
    }

    item_count_ = orbit_count + row_symbol_orbits + col_symbol_orbits;
    first_row_symbol_item_ = 1 + orbit_count;
    first_col_symbol_item_ = 1 + orbit_count + row_symbol_orbits;
    tried_lengths_.assign(static_cast<std::size_t>((orbit_count + 2) * (n + 1)), 0);
    const int headers = item_count_ + 1;
    left_.resize(static_cast<std::size_t>(headers));
    right_.resize(static_cast<std::size_t>(headers));
    len_.assign(static_cast<std::size_t>(headers), 0);
    for (int i = 0; i < headers; ++i) {
      left_[static_cast<std::size_t>(i)] = i == 0 ? item_count_ : i - 1;
      right_[static_cast<std::size_t>(i)] = i == item_count_ ? 0 : i + 1;
    }
    up_.resize(static_cast<std::size_t>(headers));
    down_.resize(static_cast<std::size_t>(headers));
    top_.assign(static_cast<std::size_t>(headers), 0);
    for (int i = 0; i < headers; ++i) up_[static_cast<std::size_t>(i)] = down_[static_cast<std::size_t>(i)] = i;
    base_ = headers;

    for (int o : order) {
      const auto& orbit = orbits_[static_cast<std::size_t>(o)];
      const int i = orbit.representative.row;
      const int j = orbit.representative.col;
      for (int s : offered[static_cast<std::size_t>(o)]) {
        option_info_.push_back({o, s, orbit_assignment_consistent(orbit, theta_.gamma, s),
                                row_cycle_id[static_cast<std::size_t>(i)], col_cycle_id[static_cast<std::size_t>(j)],
                                symbol_cycle_id[static_cast<std::size_t>(s)]});
        append_node(orbit_item[static_cast<std::size_t>(o)]);
        append_node(1 + orbit_count + row_symbol_id[static_cast<std::size_t>(i * n + s)]);
        append_node(1 + orbit_count + row_symbol_orbits + col_symbol_id[static_cast<std::size_t>(j * n + s)]);
      }
    }
  }

  void append_node(int item) {
    const int x = static_cast<int>(top_.size());
    top_.push_back(item);
    up_.push_back(up_[static_cast<std::size_t>(item)]);
    down_.push_back(item);
    down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(item)])] = x;
    up_[static_cast<std::size_t>(item)] = x;
    ++len_[static_cast<std::size_t>(item)];
  }

  static std::vector<int> lengths_of_cycles(const Permutation& p) { return decompose(p).lengths(); }

  ItemKind kind_of(int item) const {
    if (item < first_row_symbol_item_) return ItemKind::kCell;
    return item < first_col_symbol_item_ ? ItemKind::kRowSymbol : ItemKind::kColSymbol;
  }

  // Length of the cycle through which the option varies (symbol cycle for
  // cell items, column cycle for row-symbol items, row cycle for
  // column-symbol items) if no chosen option has touched it yet, else 0.
  // Options at one depth with the same nonzero value are interchangeable.
  int free_length(ItemKind kind, const OptionInfo& info) const {
    switch (kind) {
      case ItemKind::kCell: {
        const auto c = static_cast<std::size_t>(info.symbol_cycle);
        return symbol_touch_[c] ? 0 : symbol_cycle_len_[c];
      }
      case ItemKind::kRowSymbol: {
        const auto c = static_cast<std::size_t>(info.col_cycle);
        return col_touch_[c] ? 0 : col_cycle_len_[c];
      }
      case ItemKind::kColSymbol: {
        const auto c = static_cast<std::size_t>(info.row_cycle);
        return row_touch_[c] ? 0 : row_cycle_len_[c];
      }
    }
    return 0;
  }

  void touch(const OptionInfo& info, int delta) {
    row_touch_[static_cast<std::size_t>(info.row_cycle)] += delta;
    col_touch_[static_cast<std::size_t>(info.col_cycle)] += delta;
    symbol_touch_[static_cast<std::size_t>(info.symbol_cycle)] += delta;
  }

  int option_of(int node) const { return (node - base_) / 3; }
  int option_first(int node) const { return base_ + 3 * option_of(node); }

  void hide(int p) {
    const int first = option_first(p);
    for (int q = first; q < first + 3; ++q) {
      if (q == p) continue;
      const auto uq = static_cast<std::size_t>(up_[static_cast<std::size_t>(q)]);
      const auto dq = static_cast<std::size_t>(down_[static_cast<std::size_t>(q)]);
      down_[uq] = static_cast<int>(dq);
      up_[dq] = static_cast<int>(uq);
      --len_[static_cast<std::size_t>(top_[static_cast<std::size_t>(q)])];
    }
  }

  void unhide(int p) {
    const int first = option_first(p);
    for (int q = first + 2; q >= first; --q) {
      if (q == p) continue;
      const auto sq = static_cast<std::size_t>(q);
      down_[static_cast<std::size_t>(up_[sq])] = q;
      up_[static_cast<std::size_t>(down_[sq])] = q;
      ++len_[static_cast<std::size_t>(top_[sq])];
    }
  }

  void cover(int item) {
    for (int p = down_[static_cast<std::size_t>(item)]; p != item; p = down_[static_cast<std::size_t>(p)]) hide(p);
    const auto l = static_cast<std::size_t>(left_[static_cast<std::size_t>(item)]);
    const auto r = static_cast<std::size_t>(right_[static_cast<std::size_t>(item)]);
    right_[l] = static_cast<int>(r);
    left_[r] = static_cast<int>(l);
  }

  void uncover(int item) {
    const auto l = static_cast<std::size_t>(left_[static_cast<std::size_t>(item)]);
    const auto r = static_cast<std::size_t>(right_[static_cast<std::size_t>(item)]);
    right_[l] = item;
    left_[r] = item;
    for (int p = up_[static_cast<std::size_t>(item)]; p != item; p = up_[static_cast<std::size_t>(p)]) unhide(p);
  }

  int choose_item() const {
    int best = -1;
    int best_len = 0;
    for (int i = right_[0]; i != 0; i = right_[static_cast<std::size_t>(i)]) {
      const int l = len_[static_cast<std::size_t>(i)];
      if (best < 0 || l < best_len) {
        best = i;
        best_len = l;
        if (l <= 1) break;
      }
    }
    return best;
  }

  void charge_node() {
    if (nodes_ >= options_.budget.max_nodes) throw SearchAborted{};
    ++nodes_;
    if (options_.budget.max_time.count() > 0 && (nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > options_.budget.max_time) {
      throw SearchAborted{};
    }
  }

  // Returns true when the search should stop (a witness was found in
  // existence mode).
  bool search() {
    if (right_[0] == 0) {
      if (solutions_ == UINT64_MAX) throw CountOverflow("fixed-square count exceeds 64 bits");
      ++solutions_;
      if (!witness_) witness_ = assemble();
      return stop_at_first_;
    }
    const int item = choose_item();
    if (len_[static_cast<std::size_t>(item)] == 0) return false;
    cover(item);
    const ItemKind kind = kind_of(item);
    const int n = theta_.order();
    char* tried = tried_lengths_.data() + chosen_.size() * static_cast<std::size_t>(n + 1);
    if (symmetry_) std::fill(tried, tried + n + 1, 0);
    bool done = false;
    for (int p = down_[static_cast<std::size_t>(item)]; p != item && !done; p = down_[static_cast<std::size_t>(p)]) {
      const int opt = option_of(p);
      const OptionInfo& info = option_info_[static_cast<std::size_t>(opt)];
      if (symmetry_) {
        const int free = free_length(kind, info);
        if (free && tried[free]) continue;
        if (free) tried[free] = 1;
      }
      charge_node();
      if (!info.consistent) continue;
      const int first = option_first(p);
      for (int q = first; q < first + 3; ++q) {
        if (q != p) cover(top_[static_cast<std::size_t>(q)]);
      }
      chosen_.push_back(opt);
      touch(info, 1);
      done = search();
      touch(info, -1);
      chosen_.pop_back();
      for (int q = first + 2; q >= first; --q) {
        if (q != p) uncover(top_[static_cast<std::size_t>(q)]);
      }
    }
    uncover(item);
    return done;
  }

  LatinSquare assemble() const {
    const int n = theta_.order();
    std::vector<int> cells(static_cast<std::size_t>(n * n), -1);
    for (int opt : chosen_) {
      const auto& info = option_info_[static_cast<std::size_t>(opt)];
      int v = info.symbol;
      for (const Cell& c : orbits_[static_cast<std::size_t>(info.orbit)].cells) {
        cells[static_cast<std::size_t>(c.row * n + c.col)] = v;
        v = theta_.gamma(v);
      }
    }
    return LatinSquare(n, std::move(cells));
  }

  const Isotopism& theta_;
  SearchOptions options_;
  std::chrono::steady_clock::time_point start_;
  bool stop_at_first_ = true;

  std::vector<CellOrbit> orbits_;
  std::vector<OptionInfo> option_info_;
  int item_count_ = 0;
  int base_ = 0;
  std::vector<int> left_, right_, len_;
  std::vector<int> up_, down_, top_;

  int first_row_symbol_item_ = 0;
  int first_col_symbol_item_ = 0;
  bool symmetry_ = false;
  std::vector<int> row_cycle_len_, col_cycle_len_, symbol_cycle_len_;
  std::vector<int> row_touch_, col_touch_, symbol_touch_;
  std::vector<char> tried_lengths_;  // one row of n + 1 flags per depth

  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t solutions_ = 0;
  std::optional<LatinSquare> witness_;
};

}  // namespace

std::vector<CellOrbit> cell_orbits(const Isotopism& theta) {
  const int n = theta.order();
  const auto row_len = cycle_lengths_by_point(theta.alpha);
  const auto col_len = cycle_lengths_by_point(theta.beta);
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  std::vector<CellOrbit> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(i * n + j)]) continue;
      CellOrbit orbit;
      orbit.representative = {i, j};
      orbit.row_cycle_length = row_len[static_cast<std::size_t>(i)];
      orbit.col_cycle_length = col_len[static_cast<std::size_t>(j)];
      int a = i;
      int b = j;
      while (!seen[static_cast<std::size_t>(a * n + b)]) {
        seen[static_cast<std::size_t>(a * n + b)] = 1;
        orbit.cells.push_back({a, b});
        a = theta.alpha(a);
        b = theta.beta(b);
      }
      orbit.length = static_cast<int>(orbit.cells.size());
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

namespace {

SearchOutcome exists_by_cells(const Isotopism& theta, const SearchOptions& options) {
  OrbitCover cover(theta, options);
  const bool finished = cover.run(/*stop_at_first=*/true);
  SearchOutcome out;
  out.nodes = cover.nodes();
  out.elapsed = cover.elapsed();
  if (cover.witness()) {
    out.verdict = Verdict::kYes;
    out.witness = cover.witness();
  } else {
    out.verdict = finished ? Verdict::kNo : Verdict::kTimeout;
  }
  return out;
}

// Whatever budget `options` allows after `spent` nodes and `elapsed` time.
SearchOptions remaining(const SearchOptions& options, std::uint64_t spent, std::chrono::duration<double> elapsed) {
  SearchOptions rest = options;
  rest.budget.max_nodes = options.budget.max_nodes - std::min(spent, options.budget.max_nodes);
  if (options.budget.max_time.count() > 0) {
    const auto left = options.budget.max_time - std::chrono::duration_cast<std::chrono::milliseconds>(elapsed);
    rest.budget.max_time = std::max(left, std::chrono::milliseconds{1});
  }
  return rest;
}

}  // namespace

SearchOutcome exists_square(const Isotopism& theta, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchOptions probe = options;
  probe.budget.max_nodes = std::min(options.budget.max_nodes, options.cell_probe_nodes);
  SearchOutcome out = exists_by_cells(theta, probe);
  if (out.verdict != Verdict::kTimeout || probe.budget.max_nodes == options.budget.max_nodes) return out;

  std::uint64_t spent = out.nodes;
  if (options.max_row_patterns > 0) {
    std::uint64_t row_nodes = 0;
    const auto by_rows =
        search_row_patterns(theta, remaining(options, spent, std::chrono::steady_clock::now() - start), row_nodes);
    if (by_rows) {
      out = *by_rows;
      out.nodes += spent;
      out.elapsed = std::chrono::steady_clock::now() - start;
      return out;
    }
    spent += row_nodes;
  }
  out = exists_by_cells(theta, remaining(options, spent, std::chrono::steady_clock::now() - start));
  out.nodes += spent;
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

CountOutcome count_squares(const Isotopism& theta, const SearchOptions& options) {
  OrbitCover cover(theta, options);
  const bool finished = cover.run(/*stop_at_first=*/false);
  CountOutcome out;
  out.nodes = cover.nodes();
  out.elapsed = cover.elapsed();
  if (finished) out.count = cover.solutions();
  return out;
}

std::uint64_t count_by_oracle(const Isotopism& theta) {
  std::uint64_t count = 0;
  for_each_latin_square(theta.order(), [&](const LatinSquare& l) {
    if (is_autotopism(l, theta)) ++count;
    return true;
  });
  return count;
}

}  // namespace atlas
