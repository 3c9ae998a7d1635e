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

#ifndef HYSTCON_SOLVER_HPP_
#define HYSTCON_SOLVER_HPP_

/// \file
/// st-connectivity in the directed hypercube with forbidden vertices.
///
/// The solver alternates two bounded breadth-first waves (upward from the
/// source, downward from the target) with a compression step. When a wave
/// grows past max(|F|,1) * d sets, a bipartite matching between the two
/// frontiers either certifies |F|+1 disjoint routes (so one of them avoids
/// F) or yields a small vertex cover through which every avoiding route
/// must pass.
///
/// Structural bounds are checked while running and a violation throws
/// InternalError.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hystcon/bipartite_matching.hpp"
#include "hystcon/errors.hpp"
#include "hystcon/lehman_ron.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon {

enum class Mode { decision, search };
enum class Direction { up, down };

struct HystconInstance {
  std::size_t n = 0;
  VertexSet source;
  VertexSet target;
  std::vector<VertexSet> forbidden;
};

struct Frontier {
  /// Sorted, duplicate-free, all at one level.
  std::vector<VertexSet> members;
  std::size_t level_counter = 0;
};

struct SolveOutcome {
  bool yes = false;
  /// Ascending S -> T path. Empty for NO and for decision-mode YES.
  std::vector<VertexSet> path;
};

struct SolveStats {
  std::size_t d = 0;
  std::size_t normalized_forbidden = 0;
  std::size_t threshold = 0;
  std::size_t outer_iterations = 0;
  std::size_t compression_calls = 0;
  std::size_t max_compression_rounds = 0;
  std::size_t max_frontier = 0;
  std::size_t max_compressed_frontier = 0;
  std::size_t greedy_matchings = 0;
  std::size_t explicit_matchings = 0;
  std::size_t lehman_ron_calls = 0;
  std::size_t frontier_checks = 0;
};

struct SolverOptions {
  /// Above |S-frontier| * |T-frontier| pairs, a greedy matching is tried
  /// before the explicit graph is built.
  std::size_t explicit_pair_budget = std::size_t{1} << 22;
};

/// First-discovery parent links of both waves.
struct ParentMaps {
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> up_parent;
  std::unordered_map<VertexSet, VertexSet, VertexSetHash> down_parent;

  void record_up(const VertexSet& child, const VertexSet& parent) {
    up_parent.try_emplace(child, parent);
  }
  void record_down(const VertexSet& child, const VertexSet& parent) {
    down_parent.try_emplace(child, parent);
  }

  /// source, ..., v. Throws InternalError if the chain breaks.
  std::vector<VertexSet> up_chain(const VertexSet& v, const VertexSet& source) const {
    std::vector<VertexSet> out{v};
    while (!(out.back() == source)) {
      const auto it = up_parent.find(out.back());
      HYSTCON_CHECK(it != up_parent.end(), "vertex " + to_string(out.back()) + " has no up parent");
      out.push_back(it->second);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// v, ..., target. Throws InternalError if the chain breaks.
  std::vector<VertexSet> down_chain(const VertexSet& v, const VertexSet& target) const {
    std::vector<VertexSet> out{v};
    while (!(out.back() == target)) {
      const auto it = down_parent.find(out.back());
      HYSTCON_CHECK(it != down_parent.end(),
                    "vertex " + to_string(out.back()) + " has no down parent");
      out.push_back(it->second);
    }
    return out;
  }
};

/// Source chain to `meet`, then target chain from it.
inline std::vector<VertexSet> reconstruct_path(const VertexSet& meet, const ParentMaps& maps,
                                               const VertexSet& source, const VertexSet& target) {
  std::vector<VertexSet> path = maps.up_chain(meet, source);
  std::vector<VertexSet> tail = maps.down_chain(meet, target);
  path.insert(path.end(), std::make_move_iterator(tail.begin() + 1),
              std::make_move_iterator(tail.end()));
  return path;
}

/// Source chain to the first vertex of `bridge`, the bridge itself, then
/// the target chain from its last vertex.
inline std::vector<VertexSet> reconstruct_path(const std::vector<VertexSet>& bridge,
                                               const ParentMaps& maps, const VertexSet& source,
                                               const VertexSet& target) {
  HYSTCON_CHECK(!bridge.empty(), "empty bridge");
  std::vector<VertexSet> path = maps.up_chain(bridge.front(), source);
  path.insert(path.end(), bridge.begin() + 1, bridge.end());
  std::vector<VertexSet> tail = maps.down_chain(bridge.back(), target);
  path.insert(path.end(), std::make_move_iterator(tail.begin() + 1),
              std::make_move_iterator(tail.end()));
  return path;
}

/// Drops duplicates and every U outside the interval [S, T].
/// Throws UsageError on a ground-size mismatch.
inline std::vector<VertexSet> normalize_forbidden(const HystconInstance& inst) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> out;
  for (const auto& f : inst.forbidden) {
    if (f.ground_size() != inst.n) {
      throw UsageError("forbidden set " + to_string(f) + " has wrong ground size");
    }
    if (!is_subset(inst.source, f) || !is_subset(f, inst.target)) continue;
    if (seen.insert(f).second) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// One solve invocation: the normalized instance, parent maps and counters.
///
/// The phase methods are public so they can be exercised one at a time.
/// Callers must have checked that S and T are outside F and S is a subset
/// of T.
class SearchContext {
 public:
  SearchContext(const HystconInstance& inst, Mode mode, SolverOptions options = {})
      : source_(inst.source), target_(inst.target), n_(inst.n), mode_(mode),
        options_(options) {
    const auto normalized = normalize_forbidden(inst);
    forbidden_.insert(normalized.begin(), normalized.end());
    d_ = target_.level() - source_.level();
    threshold_ = std::max<std::size_t>(forbidden_.size(), 1) * d_;
    stats_.d = d_;
    stats_.normalized_forbidden = forbidden_.size();
    stats_.threshold = threshold_;
  }

  std::size_t d() const noexcept { return d_; }
  std::size_t threshold() const noexcept { return threshold_; }
  std::size_t forbidden_count() const noexcept { return forbidden_.size(); }
  bool is_forbidden(const VertexSet& v) const { return forbidden_.contains(v); }
  const ParentMaps& parents() const noexcept { return parents_; }
  const SolveStats& stats() const noexcept { return stats_; }
  const VertexSet& source() const noexcept { return source_; }
  const VertexSet& target() const noexcept { return target_; }

  /// All F-avoiding neighbors of the members in one direction.
  std::vector<VertexSet> next_step(const std::vector<VertexSet>& members, Direction dir) {
    std::unordered_set<VertexSet, VertexSetHash> next;
    next.reserve(members.size() * 4);
    for (const auto& v : members) {
      auto visit = [&](VertexSet&& u) {
        if (forbidden_.contains(u)) return;
        const auto [it, fresh] = next.insert(std::move(u));
        if (!fresh) return;
        if (dir == Direction::up) {
          parents_.record_up(*it, v);
        } else {
          parents_.record_down(*it, v);
        }
      };
      if (dir == Direction::up) {
        v.for_each_up_neighbor(visit);
      } else {
        v.for_each_down_neighbor(visit);
      }
    }
    std::vector<VertexSet> out;
    out.reserve(next.size());
    for (auto it = next.begin(); it != next.end();) {
      out.push_back(std::move(next.extract(it++).value()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Steps while 1 <= |X| <= threshold and l_x + l_y < d.
  Frontier bfs_phase(Frontier x, std::size_t l_y, Direction dir) {
    while (!x.members.empty() && x.members.size() <= threshold_ &&
           x.level_counter + l_y < d_) {
      x.members = next_step(x.members, dir);
      ++x.level_counter;
    }
    check_frontier(x, l_y);
    return x;
  }

  /// Upward wave, then downward wave against the updated upward counter.
  std::pair<Frontier, Frontier> double_bfs_phase(Frontier s, Frontier t) {
    s = bfs_phase(std::move(s), t.level_counter, Direction::up);
    t = bfs_phase(std::move(t), s.level_counter, Direction::down);
    return {std::move(s), std::move(t)};
  }

  struct CompressionResult {
    bool yes = false;
    std::vector<VertexSet> path;
    Frontier compressed;
  };

  CompressionResult compression_phase(Frontier s, const Frontier& t) {
    ++stats_.compression_calls;
    HYSTCON_CHECK(t.members.size() > threshold_, "target frontier below the threshold");
    const std::size_t f = forbidden_.size();
    std::vector<VertexSet> t_prime;
    std::size_t rounds = 0;
    while (true) {
      ++rounds;
      stats_.max_compression_rounds = std::max(stats_.max_compression_rounds, rounds);
      HYSTCON_CHECK(rounds <= d_, "compression loop exceeded d rounds");

      MatchingRound mr = match_frontiers(s.members, t.members, f + 1);
      if (mr.pairs.size() > f) {
        CompressionResult out;
        out.yes = true;
        if (mode_ == Mode::search) out.path = bridge_path(s.members, t.members, mr.pairs);
        return out;
      }

      const VertexCover cover = koenig_cover(mr.graph, mr.matching);
      for (int r : cover.right_nodes) t_prime.push_back(t.members[static_cast<std::size_t>(r)]);
      Frontier xs;
      xs.level_counter = s.level_counter;
      for (int l : cover.left_nodes) xs.members.push_back(s.members[static_cast<std::size_t>(l)]);

      auto [s2, t2] = double_bfs_phase(std::move(xs), t);
      const std::size_t sum = s2.level_counter + t2.level_counter;
      const auto meet = first_common(s2.members, t2.members);
      if (s2.members.empty() || (sum == d_ && meet == nullptr)) {
        std::sort(t_prime.begin(), t_prime.end());
        t_prime.erase(std::unique(t_prime.begin(), t_prime.end()), t_prime.end());
        HYSTCON_CHECK(t_prime.size() <= f * d_, "compressed frontier exceeds |F| * d");
        stats_.max_compressed_frontier = std::max(stats_.max_compressed_frontier, t_prime.size());
        CompressionResult out;
        out.compressed.members = std::move(t_prime);
        out.compressed.level_counter = t.level_counter;
        return out;
      }
      if (sum == d_) {
        CompressionResult out;
        out.yes = true;
        if (mode_ == Mode::search) out.path = reconstruct_path(*meet, parents_, source_, target_);
        return out;
      }
      s = std::move(s2);
    }
  }

  SolveOutcome run() {
    Frontier s{{source_}, 0};
    Frontier t{{target_}, 0};
    while (true) {
      ++stats_.outer_iterations;
      HYSTCON_CHECK(stats_.outer_iterations <= std::max<std::size_t>(d_, 1),
                    "outer loop exceeded d iterations");
      std::tie(s, t) = double_bfs_phase(std::move(s), std::move(t));
      const std::size_t sum = s.level_counter + t.level_counter;
      if (s.members.empty() || t.members.empty()) return {};
      const auto meet = first_common(s.members, t.members);
      if (sum == d_) {
        if (meet == nullptr) return {};
        SolveOutcome out{true, {}};
        if (mode_ == Mode::search) out.path = reconstruct_path(*meet, parents_, source_, target_);
        return out;
      }
      CompressionResult c = compression_phase(s, t);
      if (c.yes) return {true, std::move(c.path)};
      t = std::move(c.compressed);
    }
  }

 private:
  struct MatchingRound {
    BipartiteGraph graph;
    Matching matching;
    std::vector<std::pair<int, int>> pairs;
  };

  static const VertexSet* first_common(const std::vector<VertexSet>& a,
                                       const std::vector<VertexSet>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        return &*i;
      }
    }
    return nullptr;
  }

  void check_frontier(const Frontier& x, std::size_t l_y) {
    ++stats_.frontier_checks;
    const std::size_t size = x.members.size();
    stats_.max_frontier = std::max(stats_.max_frontier, size);
    const bool ok = size == 0 || x.level_counter + l_y == d_ ||
                    (size > threshold_ && size <= threshold_ * std::max<std::size_t>(n_, 1));
    HYSTCON_CHECK(ok, "frontier size " + std::to_string(size) + " outside the bfs exit bounds");
  }

  MatchingRound match_frontiers(const std::vector<VertexSet>& s, const std::vector<VertexSet>& t,
                                std::size_t k) {
    MatchingRound out;
    if (s.size() * t.size() > options_.explicit_pair_budget) {
      std::vector<char> used(t.size(), 0);
      for (std::size_t i = 0; i < s.size() && out.pairs.size() < k; ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (!used[j] && is_subset(s[i], t[j])) {
            used[j] = 1;
            out.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            break;
          }
        }
      }
      if (out.pairs.size() >= k) {
        ++stats_.greedy_matchings;
        return out;
      }
      out.pairs.clear();
    }
    ++stats_.explicit_matchings;
    out.graph = BipartiteGraph(s.size(), t.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (is_subset(s[i], t[j])) out.graph.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
      }
    }
    out.matching = self_reduction(out.graph, k);
    out.pairs = out.matching.pairs();
    return out;
  }

  std::vector<VertexSet> bridge_path(const std::vector<VertexSet>& s,
                                     const std::vector<VertexSet>& t,
                                     const std::vector<std::pair<int, int>>& pairs) {
    ++stats_.lehman_ron_calls;
    LehmanRonInstance lr;
    lr.n = n_;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      lr.r_family.push_back(s[static_cast<std::size_t>(pairs[i].first)]);
      lr.s_family.push_back(t[static_cast<std::size_t>(pairs[i].second)]);
      lr.phi.push_back(static_cast<int>(i));
    }
    const DisjointPathSet paths = compute_lehman_ron_paths(lr);
    for (const auto& p : paths.paths) {
      const bool clean = std::none_of(p.begin(), p.end(),
                                      [&](const VertexSet& v) { return forbidden_.contains(v); });
      if (clean) return reconstruct_path(p, parents_, source_, target_);
    }
    throw InternalError("no disjoint path avoids the forbidden family");
  }

  VertexSet source_;
  VertexSet target_;
  std::size_t n_;
  Mode mode_;
  SolverOptions options_;
  std::unordered_set<VertexSet, VertexSetHash> forbidden_;
  std::size_t d_ = 0;
  std::size_t threshold_ = 0;
  ParentMaps parents_;
  SolveStats stats_;
};

/// Throws UsageError when S, T or a member of F has the wrong ground size.
inline void validate_instance(const HystconInstance& inst) {
  if (inst.source.ground_size() != inst.n || inst.target.ground_size() != inst.n) {
    throw UsageError("source and target must have ground size " + std::to_string(inst.n));
  }
  for (const auto& f : inst.forbidden) {
    if (f.ground_size() != inst.n) {
      throw UsageError("forbidden set " + to_string(f) + " has wrong ground size");
    }
  }
}

/// Decides (and in search mode finds) an F-avoiding ascending S -> T path.
inline SolveOutcome solve(const HystconInstance& inst, Mode mode, SolveStats* stats = nullptr,
                          SolverOptions options = {}) {
  validate_instance(inst);
  SolveOutcome out;
  if (!is_subset(inst.source, inst.target)) return out;
  const bool endpoint_forbidden =
      std::any_of(inst.forbidden.begin(), inst.forbidden.end(), [&](const VertexSet& f) {
        return f == inst.source || f == inst.target;
      });
  if (endpoint_forbidden) return out;
  if (inst.source == inst.target) {
    out.yes = true;
    if (mode == Mode::search) out.path = {inst.source};
    return out;
  }
  SearchContext ctx(inst, mode, options);
  out = ctx.run();
  if (stats) *stats = ctx.stats();
  if (out.yes && mode == Mode::search) {
    const auto& p = out.path;
    HYSTCON_CHECK(p.size() == ctx.d() + 1 && p.front() == inst.source && p.back() == inst.target,
                  "path has wrong endpoints or length");
    for (std::size_t i = 0; i < p.size(); ++i) {
      HYSTCON_CHECK(!ctx.is_forbidden(p[i]), "path visits forbidden " + to_string(p[i]));
      if (i > 0) {
        HYSTCON_CHECK(is_subset(p[i - 1], p[i]) && p[i].level() == p[i - 1].level() + 1,
                      "path step is not a single insertion");
      }
    }
  }
  return out;
}

}  // namespace hystcon

#endif  // HYSTCON_SOLVER_HPP_
