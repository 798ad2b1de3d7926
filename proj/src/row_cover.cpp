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
// Row-orbit engine. For an alpha-cycle (i, alpha(i), ..., alpha^{r-1}(i))
// the rows of a fixed square satisfy row(alpha^k(i)) = gamma^k . rho .
// beta^-k with rho = row(i). A "pattern" is a first row rho that closes up
// (rho . beta^r = gamma^r . rho) and whose r rows never repeat a symbol in a
// column. Choosing one pattern per alpha-cycle so that every (column,
// symbol) pair is used exactly once is equivalent to finding the square.
//
// Symmetry: the centralizers of beta and gamma act on patterns by
// rho -> c^-1 . rho . b and rotating a cycle's rows is an element of the
// centralizer of alpha. Patterns are stored one per rotation class, and the
// first pattern of the root cycle length is drawn only from one
// representative per double coset C(gamma) rho C(beta). Two first rows lie
// in the same double coset iff the pairs (beta, rho^-1 gamma rho) are
// simultaneously conjugate, which is decided by a canonical labelling.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "row_cover.hpp"

namespace atlas {
namespace {

class Exhausted {};

using Code = std::vector<int>;

// Canonical form of a pair of permutations under simultaneous conjugation.
Code pair_code(const std::vector<int>& p, const std::vector<int>& q) {
  const int n = static_cast<int>(p.size());
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<Code> codes;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> order;
  for (int root = 0; root < n; ++root) {
    if (component[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<int> members{root};
    component[static_cast<std::size_t>(root)] = root;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int v : {p[static_cast<std::size_t>(members[k])], q[static_cast<std::size_t>(members[k])]}) {
        if (component[static_cast<std::size_t>(v)] < 0) {
          component[static_cast<std::size_t>(v)] = root;
          members.push_back(v);
        }
      }
    }
    Code best;
    for (int start : members) {
      for (int m : members) label[static_cast<std::size_t>(m)] = -1;
      order.assign(1, start);
      label[static_cast<std::size_t>(start)] = 0;
      Code code;
      code.reserve(2 * members.size() + 1);
      code.push_back(static_cast<int>(members.size()));
      for (std::size_t k = 0; k < order.size(); ++k) {
        for (int v : {p[static_cast<std::size_t>(order[k])], q[static_cast<std::size_t>(order[k])]}) {
          if (label[static_cast<std::size_t>(v)] < 0) {
            label[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
            order.push_back(v);
          }
          code.push_back(label[static_cast<std::size_t>(v)]);
        }
        if (!best.empty() && std::lexicographical_compare(best.begin(), best.end(), code.begin(), code.end())) break;
      }
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  Code out;
  for (const auto& c : codes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<int> images(const Permutation& p) {
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) v[static_cast<std::size_t>(i)] = p(i);
  return v;
}

class RowCover {
 public:
  RowCover(const Isotopism& theta, const SearchOptions& options)
      : theta_(theta), options_(options), n_(theta.order()), start_(std::chrono::steady_clock::now()) {}

  // nullopt if the pattern set is larger than the configured limit.
  std::optional<SearchOutcome> run() {
    SearchOutcome out;
    bool applicable = true;
    try {
      applicable = n_ <= 64 && enumerate_patterns();
      if (applicable) search_root();
    } catch (const Exhausted&) {
      out.nodes = nodes_;
      out.elapsed = elapsed();
      out.verdict = Verdict::kTimeout;
      return out;
    }
    out.nodes = nodes_;
    out.elapsed = elapsed();
    if (!applicable) return std::nullopt;
    if (witness_) {
      out.verdict = Verdict::kYes;
      out.witness = witness_;
    } else {
      out.verdict = Verdict::kNo;
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::chrono::duration<double> elapsed() const { return std::chrono::steady_clock::now() - start_; }

  void charge_node() {
    if (nodes_ >= options_.budget.max_nodes) throw Exhausted{};
    ++nodes_;
    if (options_.budget.max_time.count() > 0 && (nodes_ & 0xFFF) == 0 && elapsed() > options_.budget.max_time) {
      throw Exhausted{};
    }
  }

  std::uint64_t mask(std::size_t pattern, int col) const {
    return masks_[pattern * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col)];
  }

  int first_row(std::size_t pattern, int col) const {
    return first_rows_[pattern * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col)];
  }

  // Fills the pattern tables; false if the limit is exceeded.
  bool enumerate_patterns() {
    for (const auto& cycle : decompose(theta_.alpha).cycles) {
      const int r = static_cast<int>(cycle.size());
      auto it = std::find(lengths_.begin(), lengths_.end(), r);
      if (it == lengths_.end()) {
        lengths_.push_back(r);
        quota_.push_back(0);
        it = lengths_.end() - 1;
      }
      ++quota_[static_cast<std::size_t>(it - lengths_.begin())];
      cycles_.push_back(cycle);
    }
    for (std::size_t li = 0; li < lengths_.size(); ++li) {
      const std::size_t before = length_of_.size();
      if (!enumerate_length(static_cast<int>(li))) return false;
      if (root_length_ < 0 || length_of_.size() - before < root_size_) {
        root_length_ = static_cast<int>(li);
        root_size_ = length_of_.size() - before;
        root_first_ = before;
      }
    }
    return true;
  }

  bool enumerate_length(int li) {
    const int r = lengths_[static_cast<std::size_t>(li)];
    beta_pow_.assign(static_cast<std::size_t>(r + 1), {});
    beta_inv_pow_.assign(static_cast<std::size_t>(r + 1), {});
    gamma_pow_.assign(static_cast<std::size_t>(r + 1), {});
    for (int d = 0; d <= r; ++d) {
      beta_pow_[static_cast<std::size_t>(d)] = images(theta_.beta.pow(d));
      beta_inv_pow_[static_cast<std::size_t>(d)] = images(theta_.beta.pow(-d));
      gamma_pow_[static_cast<std::size_t>(d)] = images(theta_.gamma.pow(d));
    }
    rho_.assign(static_cast<std::size_t>(n_), -1);
    symbol_used_ = 0;
    current_length_ = li;
    return extend(r);
  }

  int bp(int d, int x) const { return beta_pow_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)]; }
  int bip(int d, int x) const { return beta_inv_pow_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)]; }
  int gp(int d, int x) const { return gamma_pow_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)]; }

  // Sets rho(col) = symbol if that keeps rho injective and the cycle's rows
  // column-distinct.
  bool place(int r, int col, int symbol) {
    if (symbol_used_ >> symbol & 1) return false;
    for (int d = 1; d < r; ++d) {
      if (bp(d, col) == col && gp(d, symbol) == symbol) return false;
      const int fwd = rho_[static_cast<std::size_t>(bp(d, col))];
      if (fwd >= 0 && fwd == gp(d, symbol)) return false;
      const int back = rho_[static_cast<std::size_t>(bip(d, col))];
      if (back >= 0 && symbol == gp(d, back)) return false;
    }
    rho_[static_cast<std::size_t>(col)] = symbol;
    symbol_used_ |= std::uint64_t{1} << symbol;
    return true;
  }

  void unplace(int col) {
    symbol_used_ &= ~(std::uint64_t{1} << rho_[static_cast<std::size_t>(col)]);
    rho_[static_cast<std::size_t>(col)] = -1;
  }

  // False once the pattern limit is exceeded.
  bool extend(int r) {
    const auto free = std::find(rho_.begin(), rho_.end(), -1);
    if (free == rho_.end()) return record(r);
    const int col = static_cast<int>(free - rho_.begin());
    std::vector<int> placed;
    for (int s = 0; s < n_; ++s) {
      charge_node();
      // rho(beta^{rm}(col)) = gamma^{rm}(s) around the beta^r-orbit of col.
      placed.clear();
      int c = col;
      int v = s;
      bool ok = true;
      do {
        if (!place(r, c, v)) {
          ok = false;
          break;
        }
        placed.push_back(c);
        c = bp(r, c);
        v = gp(r, v);
      } while (c != col);
      const bool within_limit = !ok || v != s || extend(r);
      for (auto it = placed.rbegin(); it != placed.rend(); ++it) unplace(*it);
      if (!within_limit) return false;
    }
    return true;
  }

  // Keeps rho if it is the least row of its rotation class.
  bool record(int r) {
    std::vector<int> rows(static_cast<std::size_t>(r * n_));
    for (int k = 0; k < r; ++k) {
      for (int j = 0; j < n_; ++j) {
        rows[static_cast<std::size_t>(k * n_ + j)] = gp(k, rho_[static_cast<std::size_t>(bip(k, j))]);
      }
    }
    for (int k = 1; k < r; ++k) {
      if (std::lexicographical_compare(rows.begin() + k * n_, rows.begin() + (k + 1) * n_, rows.begin(),
                                       rows.begin() + n_)) {
        return true;
      }
    }
    if (length_of_.size() >= options_.max_row_patterns) return false;
    for (int j = 0; j < n_; ++j) {
      std::uint64_t m = 0;
      for (int k = 0; k < r; ++k) m |= std::uint64_t{1} << rows[static_cast<std::size_t>(k * n_ + j)];
      masks_.push_back(m);
      first_rows_.push_back(static_cast<std::uint8_t>(rho_[static_cast<std::size_t>(j)]));
    }
    length_of_.push_back(static_cast<std::uint8_t>(current_length_));
    return true;
  }

  std::vector<std::uint32_t> root_representatives() const {
    std::vector<std::uint32_t> reps;
    const auto beta = images(theta_.beta);
    const auto gamma = images(theta_.gamma);
    std::map<Code, std::uint32_t> seen;
    std::vector<int> rho(static_cast<std::size_t>(n_)), rho_inv(static_cast<std::size_t>(n_)),
        delta(static_cast<std::size_t>(n_));
    for (std::size_t p = root_first_; p < root_first_ + root_size_; ++p) {
      for (int j = 0; j < n_; ++j) {
        rho[static_cast<std::size_t>(j)] = first_row(p, j);
        rho_inv[static_cast<std::size_t>(rho[static_cast<std::size_t>(j)])] = j;
      }
      for (int j = 0; j < n_; ++j) {
        delta[static_cast<std::size_t>(j)] =
            rho_inv[static_cast<std::size_t>(gamma[static_cast<std::size_t>(rho[static_cast<std::size_t>(j)])])];
      }
      if (seen.emplace(pair_code(beta, delta), static_cast<std::uint32_t>(p)).second) {
        reps.push_back(static_cast<std::uint32_t>(p));
      }
    }
    return reps;
  }

  using List = std::vector<std::uint32_t>;

  // For each (column, symbol) item, the positions in a candidate list of the
  // patterns that use it.
  struct ItemBits {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;
  };

  static constexpr std::size_t kBitsetMinList = 1024;
  static constexpr std::size_t kCentralizerLimit = 1'000'000;

  std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  int remaining_cycles() const { return static_cast<int>(cycles_.size() - chosen_.size()); }

  void apply(std::uint32_t p) {
    for (int j = 0; j < n_; ++j) used_[static_cast<std::size_t>(j)] |= mask(p, j);
    ++taken_[length_of_[p]];
    chosen_.push_back(p);
  }

  void retract(std::uint32_t p) {
    chosen_.pop_back();
    --taken_[length_of_[p]];
    for (int j = 0; j < n_; ++j) used_[static_cast<std::size_t>(j)] &= ~mask(p, j);
  }

  bool compatible(std::uint32_t p) const {
    if (taken_[length_of_[p]] >= quota_[length_of_[p]]) return false;
    for (int j = 0; j < n_; ++j) {
      if (mask(p, j) & used_[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  }

  ItemBits item_bits(const List& list) const {
    ItemBits b;
    b.words = (list.size() + 63) / 64;
    b.bits.assign(static_cast<std::size_t>(n_ * n_) * b.words, 0);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (int j = 0; j < n_; ++j) {
        for (std::uint64_t m = mask(list[i], j); m; m &= m - 1) {
          const auto item = static_cast<std::size_t>(j * n_ + std::countr_zero(m));
          b.bits[item * b.words + i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }
    }
    return b;
  }

  // Members of `list` compatible with the current partial square, which
  // differs from the one `list` was built for by the last chosen pattern.
  List filter(const List& list, const ItemBits* bits) const {
    List next;
    if (!bits) {
      for (std::uint32_t q : list) {
        if (compatible(q)) next.push_back(q);
      }
      return next;
    }
    const std::uint32_t p = chosen_.back();
    std::vector<std::uint64_t> clash(bits->words, 0);
    for (int j = 0; j < n_; ++j) {
      for (std::uint64_t m = mask(p, j); m; m &= m - 1) {
        const auto item = static_cast<std::size_t>(j * n_ + std::countr_zero(m));
        const std::uint64_t* row = bits->bits.data() + item * bits->words;
        for (std::size_t w = 0; w < bits->words; ++w) clash[w] |= row[w];
      }
    }
    for (std::size_t w = 0; w < bits->words; ++w) {
      for (std::uint64_t free = ~clash[w]; free; free &= free - 1) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(free));
        if (i >= list.size()) break;
        const std::uint32_t q = list[i];
        if (taken_[length_of_[q]] < quota_[length_of_[q]]) next.push_back(q);
      }
    }
    return next;
  }

  bool try_pattern(std::uint32_t p, const List& candidates, const ItemBits* bits) {
    apply(p);
    const bool done = search(filter(candidates, bits));
    retract(p);
    return done;
  }

  // The uncovered item used by the fewest candidates, and that number.
  std::pair<int, std::uint32_t> most_constrained_item(const List& candidates) const {
    std::vector<std::uint32_t> count(static_cast<std::size_t>(n_ * n_), 0);
    for (std::uint32_t p : candidates) {
      for (int j = 0; j < n_; ++j) {
        for (std::uint64_t m = mask(p, j); m; m &= m - 1) {
          ++count[static_cast<std::size_t>(j * n_ + std::countr_zero(m))];
        }
      }
    }
    int best_item = -1;
    std::uint32_t best = 0;
    for (int j = 0; j < n_; ++j) {
      for (std::uint64_t m = ~used_[static_cast<std::size_t>(j)] & full_mask(); m; m &= m - 1) {
        const int item = j * n_ + std::countr_zero(m);
        const std::uint32_t c = count[static_cast<std::size_t>(item)];
        if (best_item < 0 || c < best) {
          best_item = item;
          best = c;
        }
      }
    }
    return {best_item, best};
  }

  bool covers(std::uint32_t p, int item) const { return mask(p, item / n_) >> (item % n_) & 1; }

  std::uint64_t hash_masks(const std::uint64_t* m) const {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (int j = 0; j < n_; ++j) h = std::rotl((h ^ m[j]) * 0x9E3779B97F4A7C15ULL, 29);
    return h;
  }

  // One cycle left: some candidate must use every uncovered item.
  bool finish_one(const List& candidates) {
    for (std::uint32_t p : candidates) {
      charge_node();
      bool exact = true;
      for (int j = 0; j < n_ && exact; ++j) exact = mask(p, j) == (~used_[static_cast<std::size_t>(j)] & full_mask());
      if (exact) {
        apply(p);
        witness_ = assemble();
        return true;
      }
    }
    return false;
  }

  // Two cycles left: for each candidate p using a fixed uncovered item, look
  // up a candidate equal to the uncovered set minus p.
  bool finish_two(const List& candidates) {
    int item = -1;
    for (int j = 0; j < n_ && item < 0; ++j) {
      const std::uint64_t free = ~used_[static_cast<std::size_t>(j)] & full_mask();
      if (free) item = j * n_ + std::countr_zero(free);
    }
    std::vector<std::pair<std::uint64_t, std::uint32_t>> others;
    for (std::uint32_t q : candidates) {
      if (!covers(q, item)) others.emplace_back(hash_masks(&masks_[q * static_cast<std::size_t>(n_)]), q);
    }
    std::sort(others.begin(), others.end());
    std::vector<std::uint64_t> rest(static_cast<std::size_t>(n_));
    for (std::uint32_t p : candidates) {
      if (!covers(p, item)) continue;
      charge_node();
      for (int j = 0; j < n_; ++j) {
        rest[static_cast<std::size_t>(j)] = ~used_[static_cast<std::size_t>(j)] & full_mask() & ~mask(p, j);
      }
      const std::uint64_t h = hash_masks(rest.data());
      for (auto it = std::lower_bound(others.begin(), others.end(), std::make_pair(h, std::uint32_t{0}));
           it != others.end() && it->first == h; ++it) {
        const std::uint32_t q = it->second;
        if (!std::equal(rest.begin(), rest.end(), masks_.begin() + static_cast<std::ptrdiff_t>(q) * n_)) continue;
        if (length_of_[p] == length_of_[q] && quota_[length_of_[p]] - taken_[length_of_[p]] < 2) continue;
        apply(p);
        apply(q);
        witness_ = assemble();
        return true;
      }
    }
    return false;
  }

  bool search(const List& candidates) {
    switch (remaining_cycles()) {
      case 0:
        witness_ = assemble();
        return true;
      case 1:
        return finish_one(candidates);
      case 2:
        return finish_two(candidates);
      default:
        break;
    }
    const auto [item, branches] = most_constrained_item(candidates);
    if (branches == 0) return false;
    std::optional<ItemBits> bits;
    if (candidates.size() >= kBitsetMinList) bits = item_bits(candidates);
    for (std::uint32_t p : candidates) {
      if (!covers(p, item)) continue;
      charge_node();
      if (try_pattern(p, candidates, bits ? &*bits : nullptr)) return true;
    }
    return false;
  }

  // All elements of the centralizer of p, or nothing if there are more
  // than `limit`.
  static std::vector<std::vector<int>> centralizer(const Permutation& p, std::size_t limit) {
    const auto cycles = decompose(p).cycles;
    std::size_t size = 1;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      std::size_t same = 0;
      for (std::size_t k = 0; k <= i; ++k) same += cycles[k].size() == cycles[i].size();
      size *= same * cycles[i].size();
      if (size > limit) return {};
    }
    std::vector<std::vector<int>> out;
    std::vector<int> image(static_cast<std::size_t>(p.size()), -1);
    std::vector<bool> target_used(cycles.size(), false);
    auto place = [&](auto&& self, std::size_t i) -> void {
      if (i == cycles.size()) {
        out.push_back(image);
        return;
      }
      const std::size_t len = cycles[i].size();
      for (std::size_t t = 0; t < cycles.size(); ++t) {
        if (target_used[t] || cycles[t].size() != len) continue;
        target_used[t] = true;
        for (std::size_t shift = 0; shift < len; ++shift) {
          for (std::size_t k = 0; k < len; ++k) {
            image[static_cast<std::size_t>(cycles[i][k])] = cycles[t][(k + shift) % len];
          }
          self(self, i + 1);
        }
        target_used[t] = false;
      }
    };
    place(place, 0);
    return out;
  }

  // Least row of the rotation class of the pattern with first row rho.
  std::string rotation_key(const std::vector<int>& rho, int r) const {
    std::string best;
    std::string row(static_cast<std::size_t>(n_), '\0');
    const Permutation rho_p(rho);
    for (int k = 0; k < r; ++k) {
      const Permutation rk = theta_.gamma.pow(k) * rho_p * theta_.beta.pow(-k);
      for (int j = 0; j < n_; ++j) row[static_cast<std::size_t>(j)] = static_cast<char>(rk(j));
      if (k == 0 || row < best) best = row;
    }
    return best;
  }

  // Representatives of the orbits of `list` under the pairs (b, c) of
  // centralizer elements that map the pattern `root` onto itself. Empty if
  // the centralizer of beta is too large to enumerate.
  List stabilizer_representatives(std::uint32_t root, const List& list) const {
    const auto betas = centralizer(theta_.beta, kCentralizerLimit);
    if (betas.empty()) return {};
    const int r0 = lengths_[length_of_[root]];
    std::vector<int> rho(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) rho[static_cast<std::size_t>(j)] = first_row(root, j);
    const Permutation rho_p(rho);
    std::vector<Permutation> rotations;
    for (int k = 0; k < r0; ++k) rotations.push_back(theta_.gamma.pow(k) * rho_p * theta_.beta.pow(-k));

    // (b, c^-1) with c^-1 . rho . b a rotation of rho and c commuting with gamma.
    std::vector<std::pair<Permutation, Permutation>> group;
    for (const auto& b_images : betas) {
      const Permutation b(b_images);
      for (const Permutation& target : rotations) {
        const Permutation c = rho_p * b * target.inverse();
        if (c * theta_.gamma == theta_.gamma * c) group.emplace_back(b, c.inverse());
      }
    }
    if (group.size() <= 1) return {};

    std::unordered_map<std::string, std::uint32_t> position;
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string key(static_cast<std::size_t>(n_), '\0');
      for (int j = 0; j < n_; ++j) key[static_cast<std::size_t>(j)] = static_cast<char>(first_row(list[i], j));
      position.emplace(std::move(key), static_cast<std::uint32_t>(i));
    }
    std::vector<bool> seen(list.size(), false);
    List reps;
    std::vector<int> image(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (seen[i]) continue;
      reps.push_back(list[i]);
      const std::uint32_t q = list[i];
      const int r = lengths_[length_of_[q]];
      for (const auto& [b, c_inv] : group) {
        for (int j = 0; j < n_; ++j) {
          image[static_cast<std::size_t>(j)] = c_inv(first_row(q, b(j)));
        }
        const auto it = position.find(rotation_key(image, r));
        if (it != position.end()) seen[it->second] = true;
      }
    }
    return reps;
  }

  void search_root() {
    used_.assign(static_cast<std::size_t>(n_), 0);
    taken_.assign(lengths_.size(), 0);
    List all(length_of_.size());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = static_cast<std::uint32_t>(p);
    if (!options_.symmetry_breaking) {
      search(all);
      return;
    }
    for (std::uint32_t root : root_representatives()) {
      charge_node();
      apply(root);
      const List next = filter(all, nullptr);
      bool done = false;
      List reps;
      if (remaining_cycles() >= 3) reps = stabilizer_representatives(root, next);
      if (!reps.empty() && reps.size() < most_constrained_item(next).second) {
        const ItemBits bits = item_bits(next);
        for (std::uint32_t q : reps) {
          charge_node();
          if ((done = try_pattern(q, next, &bits))) break;
        }
      } else {
        done = search(next);
      }
      if (!done) retract(root);
      if (done) return;
    }
  }

  LatinSquare assemble() const {
    std::vector<int> cells(static_cast<std::size_t>(n_ * n_));
    std::vector<bool> assigned(cycles_.size(), false);
    for (std::uint32_t p : chosen_) {
      const int r = lengths_[length_of_[p]];
      std::size_t c = 0;
      while (assigned[c] || static_cast<int>(cycles_[c].size()) != r) ++c;
      assigned[c] = true;
      const Permutation b = theta_.beta;
      const Permutation g = theta_.gamma;
      for (int k = 0; k < r; ++k) {
        const int row = cycles_[c][static_cast<std::size_t>(k)];
        const Permutation bk = b.pow(-k);
        const Permutation gk = g.pow(k);
        for (int j = 0; j < n_; ++j) {
          cells[static_cast<std::size_t>(row * n_ + j)] =
              gk(first_row(p, bk(j)));
        }
      }
    }
    return LatinSquare(n_, std::move(cells));
  }

  const Isotopism& theta_;
  SearchOptions options_;
  int n_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;

  std::vector<std::vector<int>> cycles_;
  std::vector<int> lengths_;
  std::vector<int> quota_;

  // Pattern tables, n entries per pattern.
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint8_t> first_rows_;
  std::vector<std::uint8_t> length_of_;
  int root_length_ = -1;
  std::size_t root_first_ = 0;
  std::size_t root_size_ = 0;

  // Enumeration scratch.
  int current_length_ = 0;
  std::vector<std::vector<int>> beta_pow_, beta_inv_pow_, gamma_pow_;
  std::vector<int> rho_;
  std::uint64_t symbol_used_ = 0;

  // Search state.
  std::vector<std::uint64_t> used_;
  std::vector<int> taken_;
  std::vector<std::uint32_t> chosen_;
  std::optional<LatinSquare> witness_;
};

}  // namespace

std::optional<SearchOutcome> search_row_patterns(const Isotopism& theta, const SearchOptions& options,
                                                 std::uint64_t& nodes) {
  RowCover cover(theta, options);
  auto out = cover.run();
  nodes = cover.nodes();
  return out;
}

SearchOutcome exists_square_by_rows(const Isotopism& theta, const SearchOptions& options) {
  std::uint64_t nodes = 0;
  if (auto out = search_row_patterns(theta, options, nodes)) return *out;
  SearchOutcome out;
  out.nodes = nodes;
  return out;
}

}  // namespace atlas
