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

#ifndef HYSTCON_GENERATORS_HPP_
#define HYSTCON_GENERATORS_HPP_

/// \file
/// Seeded random instances for tests, benchmarks and the `gen` command.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hystcon/bipartite_matching.hpp"
#include "hystcon/errors.hpp"
#include "hystcon/guided_sorting.hpp"
#include "hystcon/lehman_ron.hpp"
#include "hystcon/permutation.hpp"
#include "hystcon/solver.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon {

using Rng = std::mt19937_64;

namespace gen_detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// `count` distinct values of 0..n-1 in random order.
inline std::vector<int> sample(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[uniform(rng, i, n - 1)]);
  pool.resize(count);
  return pool;
}

inline VertexSet subset_of(std::size_t n, const std::vector<int>& base,
                           const std::vector<int>& picked_positions) {
  std::vector<int> el(base);
  for (int p : picked_positions) el.push_back(p);
  return VertexSet::from_elements(n, el);
}

}  // namespace gen_detail

/// Number of vertices strictly between S and T when |T|-|S| = d, saturated.
inline std::size_t interior_size(std::size_t d) {
  if (d >= 63) return SIZE_MAX;
  return d == 0 ? 0 : (std::size_t{1} << d) - 2;
}

/// Random S subset of T with |T| - |S| = d and `forbidden_count` distinct
/// vertices strictly between them (capped at the interior size).
///
/// Each forbidden vertex is drawn either with a uniform level or with each
/// free element kept independently, mixing sparse-level and middle-level
/// cuts.
inline HystconInstance random_hystcon(std::size_t n, std::size_t d, std::size_t forbidden_count,
                                      Rng& rng) {
  using gen_detail::uniform;
  if (d > n) throw UsageError("d must not exceed n");
  HystconInstance inst;
  inst.n = n;
  const std::size_t s_level = uniform(rng, 0, n - d);
  const auto order = gen_detail::sample(rng, n, n);
  std::vector<int> s_el;
  std::vector<int> free;
  for (std::size_t i = 0; i < s_level; ++i) s_el.push_back(order[i] + 1);
  for (std::size_t i = s_level; i < s_level + d; ++i) free.push_back(order[i] + 1);
  std::sort(s_el.begin(), s_el.end());
  std::sort(free.begin(), free.end());
  inst.source = VertexSet::from_elements(n, s_el);
  std::vector<int> t_el = s_el;
  t_el.insert(t_el.end(), free.begin(), free.end());
  inst.target = VertexSet::from_elements(n, t_el);

  const std::size_t interior = interior_size(d);
  const std::size_t count = std::min(forbidden_count, interior);
  if (count == 0) return inst;

  auto make = [&](std::uint64_t bits) {
    std::vector<int> picked;
    for (std::size_t i = 0; i < d; ++i) {
      if ((bits >> i) & 1U) picked.push_back(free[i]);
    }
    return gen_detail::subset_of(n, s_el, picked);
  };

  if (interior != SIZE_MAX && 2 * count >= interior) {
    std::vector<std::uint64_t> all;
    for (std::uint64_t b = 1; b + 1 < (std::uint64_t{1} << d); ++b) all.push_back(b);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t i = 0; i < count; ++i) inst.forbidden.push_back(make(all[i]));
    return inst;
  }

  std::unordered_set<VertexSet, VertexSetHash> seen;
  while (inst.forbidden.size() < count) {
    std::vector<int> picked;
    if (uniform(rng, 0, 1) == 0) {
      const std::size_t lvl = uniform(rng, 1, d - 1);
      for (int p : gen_detail::sample(rng, d, lvl)) picked.push_back(free[static_cast<std::size_t>(p)]);
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        if (uniform(rng, 0, 1)) picked.push_back(free[i]);
      }
      if (picked.empty() || picked.size() == d) continue;
    }
    VertexSet v = gen_detail::subset_of(n, s_el, picked);
    if (seen.insert(v).second) inst.forbidden.push_back(std::move(v));
  }
  return inst;
}

/// Random LehmanRonInstance: m distinct level-s sets, each shrunk to a
/// distinct level-(s-d) subset. Requires d >= 1 and enough room at both
/// levels; throws UsageError otherwise.
inline LehmanRonInstance random_lehman_ron(std::size_t m, std::size_t n, std::size_t d, Rng& rng) {
  using gen_detail::uniform;
  if (d == 0 || d > n) throw UsageError("need 1 <= d <= n");
  auto binom = [](std::size_t a, std::size_t b) {
    double r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * static_cast<double>(a - b + i) / static_cast<double>(i);
    return r;
  };
  std::vector<std::size_t> levels;
  for (std::size_t r = 0; r + d <= n; ++r) {
    if (binom(n, r) >= static_cast<double>(m) && binom(n, r + d) >= static_cast<double>(m)) {
      levels.push_back(r);
    }
  }
  if (levels.empty()) throw UsageError("no level pair has room for m sets");
  const std::size_t r = levels[uniform(rng, 0, levels.size() - 1)];
  const std::size_t s = r + d;

  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000) throw UsageError("could not sample a Lehman-Ron instance");
    LehmanRonInstance inst;
    inst.n = n;
    std::unordered_set<VertexSet, VertexSetHash> used_s;
    std::unordered_set<VertexSet, VertexSetHash> used_r;
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      ok = false;
      for (int tries = 0; tries < 200 && !ok; ++tries) {
        std::vector<int> s_el;
        for (int p : gen_detail::sample(rng, n, s)) s_el.push_back(p + 1);
        VertexSet sv = VertexSet::from_elements(n, s_el);
        if (used_s.contains(sv)) continue;
        for (int inner = 0; inner < 20; ++inner) {
          std::vector<int> r_el;
          for (int p : gen_detail::sample(rng, s, r)) r_el.push_back(s_el[static_cast<std::size_t>(p)]);
          VertexSet rv = VertexSet::from_elements(n, r_el);
          if (used_r.contains(rv)) continue;
          used_s.insert(sv);
          used_r.insert(rv);
          inst.s_family.push_back(sv);
          inst.r_family.push_back(std::move(rv));
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;
    // Shuffle R so phi is not the identity map.
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> shuffled(m);
    inst.phi.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      shuffled[static_cast<std::size_t>(perm[j])] = inst.r_family[j];
      inst.phi[j] = perm[j];
    }
    inst.r_family = std::move(shuffled);
    return inst;
  }
}

/// Random involution on [k] with a uniformly drawn number of 2-cycles.
inline Permutation random_involution(std::size_t k, Rng& rng) {
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  const std::size_t pairs = gen_detail::uniform(rng, 0, k / 2);
  const auto pts = gen_detail::sample(rng, k, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    std::swap(images[static_cast<std::size_t>(pts[2 * i])], images[static_cast<std::size_t>(pts[2 * i + 1])]);
  }
  return Permutation(std::move(images));
}

/// Involution keeping exactly the 2-cycles of pi selected by `mask`.
inline Permutation involution_from_cycles(const Permutation& pi, std::uint64_t mask) {
  std::vector<int> images(pi.size());
  std::iota(images.begin(), images.end(), 1);
  const auto cycles = cycle_decomposition(pi).nontrivial();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if ((mask >> i) & 1U) {
      std::swap(images[static_cast<std::size_t>(cycles[i][0] - 1)],
                images[static_cast<std::size_t>(cycles[i][1] - 1)]);
    }
  }
  return Permutation(std::move(images));
}

/// Random subset (size up to `max_forbidden`) of the relevant involutions
/// of pi, i.e. those built from a proper subset of its 2-cycles.
inline std::vector<Permutation> random_relevant_involutions(const Permutation& pi,
                                                            std::size_t max_forbidden, Rng& rng) {
  const std::size_t c = cycle_decomposition(pi).nontrivial().size();
  if (c >= 63) throw UsageError("too many 2-cycles for the relevant-set generator");
  const std::uint64_t total = (std::uint64_t{1} << c) - 1;
  const std::size_t limit = static_cast<std::size_t>(std::min<std::uint64_t>(total, max_forbidden));
  const std::size_t count = limit == 0 ? 0 : gen_detail::uniform(rng, 0, limit);
  std::set<std::uint64_t> masks;
  if (total <= 4 * count + 16) {
    std::vector<std::uint64_t> all(total);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    masks.insert(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    while (masks.size() < count) masks.insert(dist(rng));
  }
  std::vector<Permutation> out;
  for (auto m : masks) out.push_back(involution_from_cycles(pi, m));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline GuidedSortingInstance random_sort_instance(std::size_t k, std::size_t max_forbidden,
                                                  Rng& rng) {
  GuidedSortingInstance inst;
  inst.pi = random_involution(k, rng);
  inst.forbidden = random_relevant_involutions(inst.pi, max_forbidden, rng);
  inst.ops = OpModel::exchange;
  return inst;
}

/// Each of the left x right pairs becomes an edge with probability p.
inline BipartiteGraph random_bipartite(std::size_t left, std::size_t right, double p, Rng& rng) {
  BipartiteGraph g(left, right);
  std::bernoulli_distribution coin(p);
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      if (coin(rng)) g.add_edge_unchecked(static_cast<int>(l), static_cast<int>(r));
    }
  }
  return g;
}

}  // namespace hystcon

#endif  // HYSTCON_GENERATORS_HPP_
