// Copyright 2026 The hystcon Authors
//
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

#ifndef HYSTCON_BIPARTITE_MATCHING_HPP_
#define HYSTCON_BIPARTITE_MATCHING_HPP_

/// \file
/// Maximum matching with an early cutoff, the max-degree self-reduction and
/// minimum vertex covers in bipartite graphs.
///
/// Nodes are plain indices on both sides. Callers keep their own mapping
/// from indices back to domain objects.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <ranges>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hystcon/errors.hpp"

namespace hystcon {

/// Anything that exposes left_size(), right_size() and a random-access
/// neighbors(l) range of right indices.
template <class G>
concept BipartiteAdjacency = requires(const G& g, int l) {
  { g.left_size() } -> std::convertible_to<std::size_t>;
  { g.right_size() } -> std::convertible_to<std::size_t>;
  { g.neighbors(l) } -> std::ranges::random_access_range;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left, std::size_t right) : right_(right), adj_(left) {}

  std::size_t left_size() const noexcept { return adj_.size(); }
  std::size_t right_size() const noexcept { return right_; }

  const std::vector<int>& neighbors(int l) const { return adj_[static_cast<std::size_t>(l)]; }

  /// Throws UsageError on an out-of-range index or a repeated edge.
  void add_edge(int l, int r) {
    if (l < 0 || static_cast<std::size_t>(l) >= adj_.size() || r < 0 ||
        static_cast<std::size_t>(r) >= right_) {
      throw UsageError("edge (" + std::to_string(l) + "," + std::to_string(r) +
                       ") out of range");
    }
    auto& row = adj_[static_cast<std::size_t>(l)];
    if (std::find(row.begin(), row.end(), r) != row.end()) {
      throw UsageError("duplicate edge (" + std::to_string(l) + "," + std::to_string(r) + ")");
    }
    row.push_back(r);
  }

  /// Appends without the duplicate scan; the caller guarantees uniqueness.
  void add_edge_unchecked(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

  bool has_edge(int l, int r) const {
    const auto& row = adj_[static_cast<std::size_t>(l)];
    return std::find(row.begin(), row.end(), r) != row.end();
  }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.size();
    return total;
  }

 private:
  std::size_t right_ = 0;
  std::vector<std::vector<int>> adj_;
};

class Matching {
 public:
  static constexpr int kUnmatched = -1;

  Matching() = default;
  Matching(std::size_t left, std::size_t right)
      : left_mate_(left, kUnmatched), right_mate_(right, kUnmatched) {}

  std::size_t size() const noexcept { return size_; }
  int left_mate(int l) const { return left_mate_[static_cast<std::size_t>(l)]; }
  int right_mate(int r) const { return right_mate_[static_cast<std::size_t>(r)]; }
  std::size_t left_size() const noexcept { return left_mate_.size(); }
  std::size_t right_size() const noexcept { return right_mate_.size(); }

  /// Both endpoints must currently be free.
  void add(int l, int r) {
    HYSTCON_CHECK(left_mate(l) == kUnmatched && right_mate(r) == kUnmatched,
                  "endpoint already matched");
    left_mate_[static_cast<std::size_t>(l)] = r;
    right_mate_[static_cast<std::size_t>(r)] = l;
    ++size_;
  }

  void remove_left(int l) {
    const int r = left_mate(l);
    if (r == kUnmatched) return;
    left_mate_[static_cast<std::size_t>(l)] = kUnmatched;
    right_mate_[static_cast<std::size_t>(r)] = kUnmatched;
    --size_;
  }

  /// Rewires l to r; used by augmentation where r's old mate is re-paired.
  void relink(int l, int r) {
    left_mate_[static_cast<std::size_t>(l)] = r;
    right_mate_[static_cast<std::size_t>(r)] = l;
  }
  void bump() noexcept { ++size_; }

  /// (left, right) pairs in ascending left order.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_);
    for (std::size_t l = 0; l < left_mate_.size(); ++l) {
      if (left_mate_[l] != kUnmatched) out.emplace_back(static_cast<int>(l), left_mate_[l]);
    }
    return out;
  }

 private:
  std::vector<int> left_mate_;
  std::vector<int> right_mate_;
  std::size_t size_ = 0;
};

struct VertexCover {
  std::vector<int> left_nodes;
  std::vector<int> right_nodes;

  std::size_t size() const noexcept { return left_nodes.size() + right_nodes.size(); }
};

/// True when every pair of m is an edge of g and no endpoint repeats.
template <BipartiteAdjacency G>
bool is_valid_matching(const G& g, const Matching& m) {
  if (m.left_size() != g.left_size() || m.right_size() != g.right_size()) return false;
  std::size_t count = 0;
  for (std::size_t l = 0; l < g.left_size(); ++l) {
    const int r = m.left_mate(static_cast<int>(l));
    if (r == Matching::kUnmatched) continue;
    if (r < 0 || static_cast<std::size_t>(r) >= g.right_size()) return false;
    if (m.right_mate(r) != static_cast<int>(l)) return false;
    const auto& row = g.neighbors(static_cast<int>(l));
    if (std::find(std::ranges::begin(row), std::ranges::end(row), r) == std::ranges::end(row)) {
      return false;
    }
    ++count;
  }
  return count == m.size();
}

namespace detail {

template <BipartiteAdjacency G>
Matching greedy_matching(const G& g, std::size_t k) {
  Matching m(g.left_size(), g.right_size());
  for (std::size_t l = 0; l < g.left_size() && m.size() < k; ++l) {
    for (int r : g.neighbors(static_cast<int>(l))) {
      if (m.right_mate(r) == Matching::kUnmatched) {
        m.add(static_cast<int>(l), r);
        break;
      }
    }
  }
  return m;
}

}  // namespace detail

/// Hopcroft-Karp that stops as soon as the matching reaches size k.
///
/// Returns a matching of size min(m*, k). The cutoff is tested after every
/// single augmentation. When `initial` is given it seeds the search, and is
/// trimmed if it already exceeds k; otherwise a greedy pass seeds it.
template <BipartiteAdjacency G>
Matching hopcroft_karp_cutoff(const G& g, std::size_t k,
                              std::optional<Matching> initial = std::nullopt) {
  constexpr int kInf = std::numeric_limits<int>::max();
  const std::size_t left = g.left_size();
  Matching m = initial ? std::move(*initial) : detail::greedy_matching(g, k);
  HYSTCON_CHECK(m.left_size() == left && m.right_size() == g.right_size(),
                "initial matching has wrong shape");
  for (std::size_t l = left; l-- > 0 && m.size() > k;) m.remove_left(static_cast<int>(l));

  std::vector<int> dist(left);
  std::vector<std::size_t> it(left);
  std::vector<int> queue;
  std::vector<int> lefts;
  std::vector<int> rights;
  queue.reserve(left);

  while (m.size() < k) {
    queue.clear();
    for (std::size_t l = 0; l < left; ++l) {
      if (m.left_mate(static_cast<int>(l)) == Matching::kUnmatched) {
        dist[l] = 0;
        queue.push_back(static_cast<int>(l));
      } else {
        dist[l] = kInf;
      }
    }
    int found = kInf;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int l = queue[head];
      const int dl = dist[static_cast<std::size_t>(l)];
      if (dl >= found) continue;
      for (int r : g.neighbors(l)) {
        const int mate = m.right_mate(r);
        if (mate == Matching::kUnmatched) {
          if (found == kInf) found = dl + 1;
        } else if (dist[static_cast<std::size_t>(mate)] == kInf) {
          dist[static_cast<std::size_t>(mate)] = dl + 1;
          queue.push_back(mate);
        }
      }
    }
    if (found == kInf) break;

    std::fill(it.begin(), it.end(), 0);
    for (std::size_t root = 0; root < left && m.size() < k; ++root) {
      if (m.left_mate(static_cast<int>(root)) != Matching::kUnmatched) continue;
      if (dist[root] != 0) continue;
      lefts.assign(1, static_cast<int>(root));
      rights.clear();
      bool augmented = false;
      while (!lefts.empty() && !augmented) {
        const int l = lefts.back();
        const auto lu = static_cast<std::size_t>(l);
        const auto& row = g.neighbors(l);
        const std::size_t deg = static_cast<std::size_t>(std::ranges::size(row));
        bool descended = false;
        for (; it[lu] < deg; ++it[lu]) {
          const int r = row[static_cast<std::ptrdiff_t>(it[lu])];
          const int mate = m.right_mate(r);
          if (mate == Matching::kUnmatched) {
            if (dist[lu] + 1 == found) {
              rights.push_back(r);
              augmented = true;
              break;
            }
          } else if (dist[static_cast<std::size_t>(mate)] != kInf &&
                     dist[static_cast<std::size_t>(mate)] == dist[lu] + 1) {
            rights.push_back(r);
            lefts.push_back(mate);
            descended = true;
            break;
          }
        }
        if (augmented || descended) continue;
        dist[lu] = kInf;
        lefts.pop_back();
        if (!rights.empty()) {
          rights.pop_back();
          ++it[static_cast<std::size_t>(lefts.back())];
        }
      }
      if (!augmented) continue;
      for (std::size_t i = 0; i < lefts.size(); ++i) {
        m.relink(lefts[i], rights[i]);
        ++it[static_cast<std::size_t>(lefts[i])];
      }
      m.bump();
    }
  }
  return m;
}

/// Max-degree self-reduction followed by Hopcroft-Karp on the residue.
///
/// While some vertex has degree >= k (k > 0) the first such vertex of
/// maximum degree is deleted and k decreases. Ties go to the lowest index,
/// left side before right. The residual graph then has fewer than
/// |V| * k edges and is matched with the cutoff. Deleted vertices are
/// re-attached in reverse order, each to its lowest free neighbor that was
/// still present when it was deleted.
template <BipartiteAdjacency G>
Matching self_reduction(const G& g, std::size_t k) {
  const std::size_t left = g.left_size();
  const std::size_t right = g.right_size();
  const std::size_t total = left + right;

  // Combined ids: left l -> l, right r -> left + r.
  std::vector<std::vector<int>> right_adj(right);
  std::vector<std::size_t> degree(total, 0);
  for (std::size_t l = 0; l < left; ++l) {
    for (int r : g.neighbors(static_cast<int>(l))) {
      right_adj[static_cast<std::size_t>(r)].push_back(static_cast<int>(l));
      ++degree[l];
      ++degree[left + static_cast<std::size_t>(r)];
    }
  }

  std::size_t max_degree = 0;
  for (std::size_t d : degree) max_degree = std::max(max_degree, d);
  std::vector<std::set<int>> buckets(max_degree + 1);
  for (std::size_t v = 0; v < total; ++v) buckets[degree[v]].insert(static_cast<int>(v));

  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> removal_index(total, kNever);
  std::vector<int> removed;
  std::size_t budget = k;
  std::size_t top = max_degree;

  auto move_bucket = [&](std::size_t v, std::size_t new_degree) {
    buckets[degree[v]].erase(static_cast<int>(v));
    degree[v] = new_degree;
    buckets[new_degree].insert(static_cast<int>(v));
  };

  while (budget > 0) {
    while (top > 0 && buckets[top].empty()) --top;
    if (top < budget || buckets[top].empty()) break;
    const auto v = static_cast<std::size_t>(*buckets[top].begin());
    buckets[top].erase(buckets[top].begin());
    removal_index[v] = removed.size();
    removed.push_back(static_cast<int>(v));
    if (v < left) {
      for (int r : g.neighbors(static_cast<int>(v))) {
        const std::size_t u = left + static_cast<std::size_t>(r);
        if (removal_index[u] == kNever) move_bucket(u, degree[u] - 1);
      }
    } else {
      for (int l : right_adj[v - left]) {
        const auto u = static_cast<std::size_t>(l);
        if (removal_index[u] == kNever) move_bucket(u, degree[u] - 1);
      }
    }
    --budget;
  }

  BipartiteGraph residual(left, right);
  std::size_t residual_edges = 0;
  std::size_t residual_nodes = 0;
  for (std::size_t v = 0; v < total; ++v) residual_nodes += removal_index[v] == kNever ? 1 : 0;
  for (std::size_t l = 0; l < left; ++l) {
    if (removal_index[l] != kNever) continue;
    for (int r : g.neighbors(static_cast<int>(l))) {
      if (removal_index[left + static_cast<std::size_t>(r)] != kNever) continue;
      residual.add_edge_unchecked(static_cast<int>(l), r);
      ++residual_edges;
    }
  }
  HYSTCON_CHECK(budget == 0 || residual_edges <= residual_nodes * budget,
                "residual graph exceeds the edge bound");

  Matching m = hopcroft_karp_cutoff(residual, budget);
  for (std::size_t j = removed.size(); j-- > 0;) {
    const auto v = static_cast<std::size_t>(removed[j]);
    auto present = [&](std::size_t u) {
      return removal_index[u] == kNever || removal_index[u] > j;
    };
    bool attached = false;
    if (v < left) {
      int best = -1;
      for (int r : g.neighbors(static_cast<int>(v))) {
        if (present(left + static_cast<std::size_t>(r)) &&
            m.right_mate(r) == Matching::kUnmatched && (best < 0 || r < best)) {
          best = r;
        }
      }
      if (best >= 0) {
        m.add(static_cast<int>(v), best);
        attached = true;
      }
    } else {
      int best = -1;
      for (int l : right_adj[v - left]) {
        if (present(static_cast<std::size_t>(l)) && m.left_mate(l) == Matching::kUnmatched &&
            (best < 0 || l < best)) {
          best = l;
        }
      }
      if (best >= 0) {
        m.add(best, static_cast<int>(v - left));
        attached = true;
      }
    }
    HYSTCON_CHECK(attached, "removed vertex has no free neighbor");
  }
  return m;
}

/// Minimum vertex cover from a maximum matching by alternating reachability.
///
/// Throws InternalError if the result does not cover every edge or its size
/// differs from |m|, which happens when m is not maximum.
template <BipartiteAdjacency G>
VertexCover koenig_cover(const G& g, const Matching& m) {
  const std::size_t left = g.left_size();
  const std::size_t right = g.right_size();
  std::vector<char> seen_left(left, 0);
  std::vector<char> seen_right(right, 0);
  std::vector<int> queue;
  for (std::size_t l = 0; l < left; ++l) {
    if (m.left_mate(static_cast<int>(l)) == Matching::kUnmatched) {
      seen_left[l] = 1;
      queue.push_back(static_cast<int>(l));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int l = queue[head];
    for (int r : g.neighbors(l)) {
      const auto ru = static_cast<std::size_t>(r);
      if (seen_right[ru]) continue;
      seen_right[ru] = 1;
      const int mate = m.right_mate(r);
      HYSTCON_CHECK(mate != Matching::kUnmatched, "matching is not maximum");
      if (!seen_left[static_cast<std::size_t>(mate)]) {
        seen_left[static_cast<std::size_t>(mate)] = 1;
        queue.push_back(mate);
      }
    }
  }
  VertexCover cover;
  for (std::size_t l = 0; l < left; ++l) {
    if (!seen_left[l]) cover.left_nodes.push_back(static_cast<int>(l));
  }
  for (std::size_t r = 0; r < right; ++r) {
    if (seen_right[r]) cover.right_nodes.push_back(static_cast<int>(r));
  }
  HYSTCON_CHECK(cover.size() == m.size(), "cover size differs from matching size");
  for (std::size_t l = 0; l < left; ++l) {
    if (!seen_left[l]) continue;
    for (int r : g.neighbors(static_cast<int>(l))) {
      HYSTCON_CHECK(seen_right[static_cast<std::size_t>(r)], "edge left uncovered");
    }
  }
  return cover;
}

}  // namespace hystcon

#endif  // HYSTCON_BIPARTITE_MATCHING_HPP_
