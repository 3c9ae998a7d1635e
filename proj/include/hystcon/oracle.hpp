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

#ifndef HYSTCON_ORACLE_HPP_
#define HYSTCON_ORACLE_HPP_

/// \file
/// Brute-force reference searches used to cross-check the solver.
///
/// Nothing here calls into the solver or its neighbor generation. The
/// hypercube search works on 64-bit masks and the permutation searches on
/// plain integer vectors, so a bug in the main code path cannot hide itself.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hystcon/errors.hpp"
#include "hystcon/guided_sorting.hpp"
#include "hystcon/permutation.hpp"
#include "hystcon/solver.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon {

struct OracleConfig {
  std::size_t hypercube_cap = 20;
  std::size_t exchange_cap = 8;
  std::size_t adjacent_cap = 10;

  /// Defaults, with every cap replaced by HYSTCON_ORACLE_CAP when set.
  static OracleConfig from_env() {
    OracleConfig cfg;
    if (const char* raw = std::getenv("HYSTCON_ORACLE_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(raw, &end, 10);
      if (end == raw || *end != '\0') {
        throw UsageError(std::string("HYSTCON_ORACLE_CAP is not an integer: ") + raw);
      }
      cfg.hypercube_cap = cfg.exchange_cap = cfg.adjacent_cap = static_cast<std::size_t>(v);
    }
    return cfg;
  }
};

template <class T>
struct OracleResult {
  bool reachable = false;
  std::optional<std::vector<T>> path;
  std::optional<std::size_t> distance;
};

namespace oracle_detail {

using Mask = std::uint64_t;

inline Mask to_mask(const VertexSet& v) {
  Mask m = 0;
  for (int q : v.elements()) m |= Mask{1} << (q - 1);
  return m;
}

inline VertexSet from_mask(Mask m, std::size_t n) {
  std::vector<int> el;
  for (std::size_t q = 0; q < n; ++q) {
    if ((m >> q) & 1U) el.push_back(static_cast<int>(q) + 1);
  }
  return VertexSet::from_elements(n, el);
}

using Perm = std::vector<int>;

inline std::size_t cycles_of(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) seen[j] = 1;
  }
  return c;
}

inline std::size_t exchange_distance(const Perm& p) { return p.size() - cycles_of(p); }

inline std::size_t inversion_count(const Perm& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j] ? 1 : 0;
  }
  return c;
}

inline bool sorted(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

/// All single-operation successors of p.
inline std::vector<Perm> moves(const Perm& p, OpModel ops) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (ops == OpModel::adjacent && j != i + 1) break;
      Perm q = p;
      std::swap(q[i], q[j]);
      out.push_back(std::move(q));
    }
  }
  return out;
}

template <class Keep>
OracleResult<Permutation> permutation_bfs(const GuidedSortingInstance& inst, Keep keep) {
  OracleResult<Permutation> out;
  std::set<Perm> banned;
  for (const auto& f : inst.forbidden) banned.insert(f.images());
  const Perm start = inst.pi.images();
  if (banned.contains(start)) return out;
  std::map<Perm, Perm> parent;
  parent.emplace(start, start);
  std::deque<Perm> queue{start};
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    if (sorted(p)) {
      std::vector<Permutation> path;
      for (Perm v = p;; v = parent.at(v)) {
        path.emplace_back(v);
        if (v == start) break;
      }
      std::reverse(path.begin(), path.end());
      out.reachable = true;
      out.distance = path.size() - 1;
      out.path = std::move(path);
      return out;
    }
    for (auto& q : moves(p, inst.ops)) {
      if (!keep(p, q) || banned.contains(q) || parent.contains(q)) continue;
      parent.emplace(q, p);
      queue.push_back(std::move(q));
    }
  }
  return out;
}

}  // namespace oracle_detail

/// Breadth-first search over ascending arcs inside [S, T] on bit masks.
/// Throws OracleCapExceeded when n is above the configured cap.
inline OracleResult<VertexSet> oracle_hystcon_bfs(const HystconInstance& inst,
                                                  const OracleConfig& cfg = OracleConfig::from_env()) {
  using oracle_detail::Mask;
  const std::size_t cap = std::min<std::size_t>(cfg.hypercube_cap, 64);
  if (inst.n > cap) {
    throw OracleCapExceeded("hypercube oracle refuses n=" + std::to_string(inst.n) +
                            " above cap " + std::to_string(cap));
  }
  OracleResult<VertexSet> out;
  const Mask s = oracle_detail::to_mask(inst.source);
  const Mask t = oracle_detail::to_mask(inst.target);
  if ((s & ~t) != 0) return out;
  std::unordered_set<Mask> banned;
  for (const auto& f : inst.forbidden) banned.insert(oracle_detail::to_mask(f));
  if (banned.contains(s) || banned.contains(t)) return out;

  std::unordered_map<Mask, Mask> parent{{s, s}};
  std::deque<Mask> queue{s};
  while (!queue.empty()) {
    const Mask v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (Mask free = t & ~v; free != 0; free &= free - 1) {
      const Mask u = v | (free & (~free + 1));
      if (banned.contains(u) || parent.contains(u)) continue;
      parent.emplace(u, v);
      queue.push_back(u);
    }
  }
  if (!parent.contains(t)) return out;
  std::vector<VertexSet> path;
  for (Mask v = t;; v = parent.at(v)) {
    path.push_back(oracle_detail::from_mask(v, inst.n));
    if (v == s) break;
  }
  std::reverse(path.begin(), path.end());
  out.reachable = true;
  out.distance = path.size() - 1;
  out.path = std::move(path);
  return out;
}

/// Shortest avoiding sorting sequence that only uses distance-decreasing
/// moves. Works for any permutation shape. Throws OracleCapExceeded above
/// the cap for the operation model.
inline OracleResult<Permutation> oracle_guided_sorting_bfs(
    const GuidedSortingInstance& inst, const OracleConfig& cfg = OracleConfig::from_env()) {
  const std::size_t cap = inst.ops == OpModel::exchange ? cfg.exchange_cap : cfg.adjacent_cap;
  if (inst.pi.size() > cap) {
    throw OracleCapExceeded("sorting oracle refuses size " + std::to_string(inst.pi.size()) +
                            " above cap " + std::to_string(cap));
  }
  auto metric = inst.ops == OpModel::exchange ? oracle_detail::exchange_distance
                                              : oracle_detail::inversion_count;
  auto res = oracle_detail::permutation_bfs(inst, [&](const auto& p, const auto& q) {
    return metric(q) + 1 == metric(p);
  });
  if (res.reachable && inst.k_bound && *res.distance > *inst.k_bound) return {};
  return res;
}

/// Unrestricted shortest avoiding sequence in the Cayley graph.
inline OracleResult<Permutation> oracle_cayley_bfs(const GuidedSortingInstance& inst,
                                                   const OracleConfig& cfg = OracleConfig::from_env()) {
  const std::size_t cap = inst.ops == OpModel::exchange ? cfg.exchange_cap : cfg.adjacent_cap;
  if (inst.pi.size() > cap) {
    throw OracleCapExceeded("Cayley oracle refuses size " + std::to_string(inst.pi.size()) +
                            " above cap " + std::to_string(cap));
  }
  return oracle_detail::permutation_bfs(inst, [](const auto&, const auto&) { return true; });
}

/// Endpoints, unit steps, length |T|-|S|+1 and avoidance of every listed
/// forbidden set.
inline bool validate_path(const std::vector<VertexSet>& path, const HystconInstance& inst) {
  using oracle_detail::Mask;
  if (path.empty()) return false;
  for (const auto& v : path) {
    if (v.ground_size() != inst.n) return false;
  }
  if (!(path.front() == inst.source) || !(path.back() == inst.target)) return false;
  std::unordered_set<Mask> banned;
  for (const auto& f : inst.forbidden) banned.insert(oracle_detail::to_mask(f));
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Mask v = oracle_detail::to_mask(path[i]);
    if (banned.contains(v)) return false;
    if (i == 0) continue;
    const Mask u = oracle_detail::to_mask(path[i - 1]);
    if ((u & ~v) != 0 || std::popcount(v & ~u) != 1) return false;
  }
  return true;
}

/// Sequence from pi to the identity, one allowed operation per step,
/// optimal length, no listed forbidden permutation.
inline bool validate_path(const std::vector<Permutation>& path, const GuidedSortingInstance& inst) {
  if (path.empty() || !(path.front() == inst.pi)) return false;
  const std::set<Permutation> banned(inst.forbidden.begin(), inst.forbidden.end());
  const auto& start = inst.pi.images();
  const std::size_t optimum = inst.ops == OpModel::exchange
                                  ? oracle_detail::exchange_distance(start)
                                  : oracle_detail::inversion_count(start);
  if (path.size() != optimum + 1) return false;
  if (!oracle_detail::sorted(path.back().images())) return false;
  for (std::size_t s = 0; s < path.size(); ++s) {
    if (path[s].size() != inst.pi.size() || banned.contains(path[s])) return false;
    if (s == 0) continue;
    const auto& a = path[s - 1].images();
    const auto& b = path[s].images();
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) diff.push_back(i);
    }
    if (diff.size() != 2 || a[diff[0]] != b[diff[1]] || a[diff[1]] != b[diff[0]]) return false;
    if (inst.ops == OpModel::adjacent && diff[1] != diff[0] + 1) return false;
  }
  return true;
}

}  // namespace hystcon

#endif  // HYSTCON_ORACLE_HPP_
