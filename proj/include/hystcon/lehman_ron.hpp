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

#ifndef HYSTCON_LEHMAN_RON_HPP_
#define HYSTCON_LEHMAN_RON_HPP_

/// \file
/// Vertex-disjoint ascending paths between two equal-size set families.
///
/// Given families R (level r) and S (level s) of the same size m and a
/// bijection phi with phi(S_j) a proper subset of S_j, build m pairwise
/// disjoint ascending paths whose union contains every member of R and S.
/// The construction peels one level at a time: it picks a level s-1 family
/// Q' through a perfect matching in a split bipartite graph, then recurses
/// on (R, Q').

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hystcon/bipartite_matching.hpp"
#include "hystcon/errors.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon {

struct LehmanRonInstance {
  std::vector<VertexSet> r_family;
  std::vector<VertexSet> s_family;
  /// phi[j] is the index in r_family of the set paired with s_family[j].
  std::vector<int> phi;
  std::size_t n = 0;
};

struct DisjointPathSet {
  std::vector<std::vector<VertexSet>> paths;
};

/// Compact JSON form used in failure reports.
inline std::string to_json(const LehmanRonInstance& inst) {
  auto family = [](const std::vector<VertexSet>& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      out += '[';
      const auto el = f[i].elements();
      for (std::size_t k = 0; k < el.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(el[k]);
      }
      out += ']';
    }
    return out + "]";
  };
  std::string out = R"({"kind":"lehman_ron","n":)" + std::to_string(inst.n);
  out += R"(,"r_family":)" + family(inst.r_family);
  out += R"(,"s_family":)" + family(inst.s_family);
  out += R"(,"phi":[)";
  for (std::size_t j = 0; j < inst.phi.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(inst.phi[j]);
  }
  return out + "]}";
}

/// Throws UsageError naming the first violated instance condition.
inline void validate_instance(const LehmanRonInstance& inst) {
  const std::size_t m = inst.r_family.size();
  if (inst.s_family.size() != m) throw UsageError("r_family and s_family differ in size");
  if (inst.phi.size() != m) throw UsageError("phi must have one entry per s_family member");
  if (m == 0) return;
  for (const auto* fam : {&inst.r_family, &inst.s_family}) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    const std::size_t lvl = fam->front().level();
    for (const auto& v : *fam) {
      if (v.ground_size() != inst.n) throw UsageError("family member has wrong ground size");
      if (v.level() != lvl) throw UsageError("family is not level-homogeneous");
      if (!seen.insert(v).second) throw UsageError("duplicate member " + to_string(v));
    }
  }
  const std::size_t r = inst.r_family.front().level();
  const std::size_t s = inst.s_family.front().level();
  if (!(r < s && s <= inst.n)) throw UsageError("levels must satisfy r < s <= n");
  std::vector<char> used(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const int i = inst.phi[j];
    if (i < 0 || static_cast<std::size_t>(i) >= m) throw UsageError("phi index out of range");
    if (used[static_cast<std::size_t>(i)]) throw UsageError("phi is not a bijection");
    used[static_cast<std::size_t>(i)] = 1;
    if (!is_subset(inst.r_family[static_cast<std::size_t>(i)], inst.s_family[j])) {
      throw UsageError("phi(S) is not a subset of S for " + to_string(inst.s_family[j]));
    }
  }
}

namespace detail {

/// compute_q with an optional hint: hint[j] indexes an R member below
/// s_family[j], tested before the full scan.
inline std::vector<VertexSet> compute_q_hinted(const std::vector<VertexSet>& r_family,
                                               const std::vector<VertexSet>& s_family,
                                               const std::vector<int>& hint) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> out;
  for (std::size_t j = 0; j < s_family.size(); ++j) {
    const VertexSet* first = hint.empty() ? nullptr : &r_family[static_cast<std::size_t>(hint[j])];
    s_family[j].for_each_down_neighbor([&](VertexSet&& q) {
      if (!seen.insert(q).second) return;
      const bool above_r =
          (first != nullptr && is_subset(*first, q)) ||
          std::any_of(r_family.begin(), r_family.end(),
                      [&](const VertexSet& r) { return is_subset(r, q); });
      if (above_r) out.push_back(std::move(q));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Level s-1 sets lying below some member of S and above some member of R,
/// deduplicated and in canonical order.
inline std::vector<VertexSet> compute_q(const std::vector<VertexSet>& r_family,
                                        const std::vector<VertexSet>& s_family,
                                        std::size_t /*n*/) {
  return detail::compute_q_hinted(r_family, s_family, {});
}

/// Split graph over (R + Q_out, Q_in + S) with lazily built rows.
///
/// Left ids: R_i -> i, Q_out_q -> m + q. Right ids: Q_in_q -> q,
/// S_j -> |Q| + j. Rows list right ids in ascending order.
class SplitGraph {
 public:
  SplitGraph(const std::vector<VertexSet>& r_family, const std::vector<VertexSet>& q_family,
             const std::vector<VertexSet>& s_family)
      : r_(r_family), q_(q_family), s_(s_family), rows_(r_.size() + q_.size()),
        built_(r_.size() + q_.size(), 0) {
    q_index_.reserve(q_.size());
    for (std::size_t q = 0; q < q_.size(); ++q) q_index_.emplace(q_[q], static_cast<int>(q));
  }

  std::size_t left_size() const noexcept { return r_.size() + q_.size(); }
  std::size_t right_size() const noexcept { return q_.size() + s_.size(); }
  std::size_t m() const noexcept { return r_.size(); }
  std::size_t q_size() const noexcept { return q_.size(); }

  const std::vector<int>& neighbors(int l) const {
    const auto lu = static_cast<std::size_t>(l);
    if (!built_[lu]) {
      build_row(lu);
      built_[lu] = 1;
    }
    return rows_[lu];
  }

  /// Index of q in the Q family, or -1.
  int q_index(const VertexSet& q) const {
    const auto it = q_index_.find(q);
    return it == q_index_.end() ? -1 : it->second;
  }

 private:
  void build_row(std::size_t l) const {
    auto& row = rows_[l];
    if (l < r_.size()) {
      for (std::size_t q = 0; q < q_.size(); ++q) {
        if (is_subset(r_[l], q_[q])) row.push_back(static_cast<int>(q));
      }
      return;
    }
    const std::size_t q = l - r_.size();
    row.push_back(static_cast<int>(q));
    for (std::size_t j = 0; j < s_.size(); ++j) {
      if (is_subset(q_[q], s_[j])) row.push_back(static_cast<int>(q_.size() + j));
    }
  }

  const std::vector<VertexSet>& r_;
  const std::vector<VertexSet>& q_;
  const std::vector<VertexSet>& s_;
  std::unordered_map<VertexSet, int, VertexSetHash> q_index_;
  mutable std::vector<std::vector<int>> rows_;
  mutable std::vector<char> built_;
};

/// Materialized split graph with the same id layout as SplitGraph.
inline BipartiteGraph build_split_bipartite(const std::vector<VertexSet>& r_family,
                                            const std::vector<VertexSet>& q_family,
                                            const std::vector<VertexSet>& s_family) {
  const SplitGraph view(r_family, q_family, s_family);
  BipartiteGraph g(view.left_size(), view.right_size());
  for (std::size_t l = 0; l < view.left_size(); ++l) {
    for (int r : view.neighbors(static_cast<int>(l))) g.add_edge_unchecked(static_cast<int>(l), r);
  }
  return g;
}

struct Triple {
  int r_index;
  int q_index;
  int s_index;
  VertexSet r;
  VertexSet q;
  VertexSet s;
};

/// One (R_i, Q_i, S_i) chain per R member, in R order.
///
/// Throws InternalError if the matching is not perfect on the split graph.
inline std::vector<Triple> extract_triples(const Matching& matching,
                                           const std::vector<VertexSet>& r_family,
                                           const std::vector<VertexSet>& q_family,
                                           const std::vector<VertexSet>& s_family) {
  const std::size_t m = r_family.size();
  const std::size_t qn = q_family.size();
  HYSTCON_CHECK(matching.left_size() == m + qn && matching.right_size() == qn + m,
                "matching shape does not fit the split graph");
  HYSTCON_CHECK(matching.size() == m + qn, "split graph matching is not perfect");
  std::vector<Triple> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int q = matching.left_mate(static_cast<int>(i));
    HYSTCON_CHECK(q >= 0 && static_cast<std::size_t>(q) < qn, "R member not matched into Q");
    const int sj = matching.left_mate(static_cast<int>(m) + q) - static_cast<int>(qn);
    HYSTCON_CHECK(sj >= 0 && static_cast<std::size_t>(sj) < m, "Q member not matched into S");
    const auto qu = static_cast<std::size_t>(q);
    const auto su = static_cast<std::size_t>(sj);
    HYSTCON_CHECK(is_subset(r_family[i], q_family[qu]) && is_subset(q_family[qu], s_family[su]),
                  "triple is not a chain");
    out.push_back({static_cast<int>(i), q, sj, r_family[i], q_family[qu], s_family[su]});
  }
  return out;
}

namespace detail {

/// Seeds a near-perfect matching of the split graph from the chains
/// phi(S_j) < Q < S_j, falling back to any R below Q.
inline Matching seed_split_matching(const SplitGraph& g, const std::vector<VertexSet>& r_family,
                                    const std::vector<VertexSet>& s_family,
                                    const std::vector<int>& phi) {
  const std::size_t m = r_family.size();
  const std::size_t qn = g.q_size();
  Matching mt(g.left_size(), g.right_size());
  std::vector<char> r_used(m, 0);
  std::vector<char> q_used(qn, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const auto preferred = static_cast<std::size_t>(phi[j]);
    std::vector<std::pair<int, VertexSet>> candidates;
    s_family[j].for_each_down_neighbor([&](VertexSet&& q) {
      const int qi = g.q_index(q);
      if (qi >= 0 && !q_used[static_cast<std::size_t>(qi)]) candidates.emplace_back(qi, std::move(q));
    });
    int chosen_q = -1;
    int chosen_r = -1;
    if (!r_used[preferred]) {
      for (const auto& [qi, q] : candidates) {
        if (is_subset(r_family[preferred], q)) {
          chosen_q = qi;
          chosen_r = static_cast<int>(preferred);
          break;
        }
      }
    }
    for (std::size_t c = 0; chosen_q < 0 && c < candidates.size(); ++c) {
      const VertexSet& q = candidates[c].second;
      for (std::size_t i = 0; i < m; ++i) {
        if (!r_used[i] && is_subset(r_family[i], q)) {
          chosen_q = candidates[c].first;
          chosen_r = static_cast<int>(i);
          break;
        }
      }
    }
    if (chosen_q < 0) continue;
    r_used[static_cast<std::size_t>(chosen_r)] = 1;
    q_used[static_cast<std::size_t>(chosen_q)] = 1;
    mt.add(chosen_r, chosen_q);
    mt.add(static_cast<int>(m) + chosen_q, static_cast<int>(qn + j));
  }
  for (std::size_t q = 0; q < qn; ++q) {
    if (!q_used[q]) mt.add(static_cast<int>(m + q), static_cast<int>(q));
  }
  return mt;
}

}  // namespace detail

/// Builds the disjoint path family. Throws UsageError on an invalid
/// instance and InternalError if an intermediate matching is not perfect.
inline DisjointPathSet compute_lehman_ron_paths(const LehmanRonInstance& inst) {
  validate_instance(inst);
  const std::size_t m = inst.r_family.size();
  DisjointPathSet out;
  if (m == 0) return out;
  const std::size_t r = inst.r_family.front().level();

  // Each peeled level remembers Q'_i -> S_i for the later extension.
  std::vector<std::unordered_map<VertexSet, VertexSet, VertexSetHash>> extensions;
  std::vector<VertexSet> upper = inst.s_family;
  std::vector<int> phi = inst.phi;

  while (upper.front().level() > r + 1) {
    std::vector<VertexSet> q_family = detail::compute_q_hinted(inst.r_family, upper, phi);
    HYSTCON_CHECK(q_family.size() >= m, "fewer Q candidates than paths");
    const SplitGraph g(inst.r_family, q_family, upper);
    const std::size_t k = g.left_size();
    Matching seed = detail::seed_split_matching(g, inst.r_family, upper, phi);
    Matching mt = hopcroft_karp_cutoff(g, k, std::move(seed));
    if (mt.size() != k) {
      LehmanRonInstance level{inst.r_family, upper, phi, inst.n};
      throw InternalError("split graph has no perfect matching: " + to_json(level));
    }
    auto triples = extract_triples(mt, inst.r_family, q_family, upper);
    std::unordered_map<VertexSet, VertexSet, VertexSetHash> ext;
    ext.reserve(m);
    std::vector<VertexSet> next(m);
    for (auto& t : triples) {
      next[static_cast<std::size_t>(t.r_index)] = t.q;
      ext.emplace(std::move(t.q), std::move(t.s));
    }
    extensions.push_back(std::move(ext));
    upper = std::move(next);
    for (std::size_t i = 0; i < m; ++i) phi[i] = static_cast<int>(i);
  }

  out.paths.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.paths.push_back({inst.r_family[static_cast<std::size_t>(phi[j])], upper[j]});
  }
  for (std::size_t e = extensions.size(); e-- > 0;) {
    for (auto& p : out.paths) {
      const auto it = extensions[e].find(p.back());
      HYSTCON_CHECK(it != extensions[e].end(), "path end has no extension");
      p.push_back(it->second);
    }
  }
  return out;
}

/// True iff `out` is m disjoint unit-step ascending paths from level r to
/// level s that together contain every member of R and S.
inline bool validate_disjoint_paths(const DisjointPathSet& out, const LehmanRonInstance& inst) {
  const std::size_t m = inst.r_family.size();
  if (out.paths.size() != m) return false;
  if (m == 0) return true;
  const std::size_t r = inst.r_family.front().level();
  const std::size_t s = inst.s_family.front().level();
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (const auto& p : out.paths) {
    if (p.size() != s - r + 1) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].ground_size() != inst.n) return false;
      if (p[i].level() != r + i) return false;
      if (i > 0 && !is_subset(p[i - 1], p[i])) return false;
      if (!seen.insert(p[i]).second) return false;
    }
  }
  for (const auto* fam : {&inst.r_family, &inst.s_family}) {
    for (const auto& v : *fam) {
      if (!seen.contains(v)) return false;
    }
  }
  return true;
}

}  // namespace hystcon

#endif  // HYSTCON_LEHMAN_RON_HPP_
