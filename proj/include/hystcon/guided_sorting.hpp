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

#ifndef HYSTCON_GUIDED_SORTING_HPP_
#define HYSTCON_GUIDED_SORTING_HPP_

/// \file
/// Optimal sorting of a permutation that avoids forbidden intermediates.
///
/// Two shapes are supported: involutions sorted by exchanges, and
/// permutations whose inversions all sit on neighboring positions sorted by
/// adjacent exchanges. In both cases an optimal sequence fixes one unit
/// (a 2-cycle or an inversion) per step, so the reachable permutations are
/// exactly the subsets of units still unsorted. The instance becomes an
/// ascending hypercube instance from {} to [k]; its path is read backwards.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hystcon/errors.hpp"
#include "hystcon/permutation.hpp"
#include "hystcon/solver.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon {

enum class OpModel { exchange, adjacent };

inline std::string to_string(OpModel m) { return m == OpModel::exchange ? "exchange" : "adjacent"; }

struct GuidedSortingInstance {
  Permutation pi;
  std::vector<Permutation> forbidden;
  OpModel ops = OpModel::exchange;
  /// Upper bound on the sequence length; unbounded when empty.
  std::optional<std::size_t> k_bound;
};

struct ExchangeSequence {
  /// 1-based position pairs (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  /// The permutation after each swap; the last one is the identity.
  std::vector<Permutation> intermediates;
};

/// Index i (0-based) of the reduced ground set <-> the swap that fixes
/// the i-th unit of pi.
struct Reduction {
  HystconInstance instance;
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  OpModel ops = OpModel::exchange;
};

namespace detail {

/// Units of pi in canonical order: 2-cycles by smallest element, or
/// inversions by position. Each unit is the position pair that fixes it.
inline std::vector<std::pair<std::size_t, std::size_t>> units(const Permutation& p, OpModel ops) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (ops == OpModel::exchange) {
    for (const auto& c : cycle_decomposition(p).nontrivial()) {
      out.emplace_back(static_cast<std::size_t>(c[0]), static_cast<std::size_t>(c[1]));
    }
  } else {
    const auto& a = p.images();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) out.emplace_back(i + 1, i + 2);
    }
  }
  return out;
}

inline void require_shape(const Permutation& pi, OpModel ops) {
  if (ops == OpModel::exchange && !is_involution(pi)) {
    throw UnsupportedInstance("is_involution", "permutation " + to_string(pi) +
                                                   " is not an involution");
  }
  if (ops == OpModel::adjacent && !all_inversions_adjacent(pi)) {
    throw UnsupportedInstance("all_inversions_adjacent",
                              "permutation " + to_string(pi) + " has a non-adjacent inversion");
  }
}

inline void require_sizes(const GuidedSortingInstance& inst) {
  for (const auto& f : inst.forbidden) {
    if (f.size() != inst.pi.size()) {
      throw UsageError("forbidden permutation " + to_string(f) + " has size " +
                       std::to_string(f.size()) + ", expected " + std::to_string(inst.pi.size()));
    }
  }
}

/// Set of units of phi, or nullopt if phi is not built from pi's units.
inline std::optional<std::vector<int>> unit_subset(const Permutation& phi, const Permutation& pi,
                                                   OpModel ops) {
  const auto pi_units = units(pi, ops);
  std::vector<int> idx;
  if (ops == OpModel::exchange) {
    if (!is_involution(phi)) return std::nullopt;
    for (const auto& u : units(phi, ops)) {
      const auto it = std::find(pi_units.begin(), pi_units.end(), u);
      if (it == pi_units.end()) return std::nullopt;
      idx.push_back(static_cast<int>(it - pi_units.begin()) + 1);
    }
  } else {
    const auto pi_inv = inversions(pi);
    const auto phi_inv = inversions(phi);
    for (const auto& inv : phi_inv) {
      const auto it = std::find(pi_inv.begin(), pi_inv.end(), inv);
      if (it == pi_inv.end()) return std::nullopt;
      // pi's inversions are all adjacent, so each one is a unit in the same order.
      idx.push_back(static_cast<int>(it - pi_inv.begin()) + 1);
    }
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace detail

/// Forbidden permutations that can occur on an optimal sequence for pi.
///
/// A member is kept when its 2-cycles (exchange model) or inversions
/// (adjacent model) form a proper subset of pi's. Throws
/// UnsupportedInstance when pi has the wrong shape.
inline std::vector<Permutation> filter_relevant(const GuidedSortingInstance& inst) {
  detail::require_shape(inst.pi, inst.ops);
  detail::require_sizes(inst);
  const std::size_t k = detail::units(inst.pi, inst.ops).size();
  std::set<Permutation> kept;
  for (const auto& f : inst.forbidden) {
    const auto sub = detail::unit_subset(f, inst.pi, inst.ops);
    if (sub && sub->size() < k) kept.insert(f);
  }
  return {kept.begin(), kept.end()};
}

/// Ascending instance <{}, [k], F'> with one ground element per unit of pi.
inline Reduction reduce_to_hystcon(const GuidedSortingInstance& inst) {
  const auto relevant = filter_relevant(inst);
  Reduction red;
  red.ops = inst.ops;
  red.positions = detail::units(inst.pi, inst.ops);
  const std::size_t k = red.positions.size();
  red.instance.n = k;
  red.instance.source = VertexSet(k);
  red.instance.target = VertexSet::full(k);
  for (const auto& f : relevant) {
    red.instance.forbidden.push_back(
        VertexSet::from_elements(k, *detail::unit_subset(f, inst.pi, inst.ops)));
  }
  return red;
}

/// Turns a descending path [k] -> {} into swaps and re-checks every
/// intermediate against the original forbidden list.
inline ExchangeSequence translate_solution(const std::vector<VertexSet>& descending,
                                           const Reduction& red,
                                           const GuidedSortingInstance& inst) {
  ExchangeSequence out;
  const std::set<Permutation> banned(inst.forbidden.begin(), inst.forbidden.end());
  HYSTCON_CHECK(!banned.contains(inst.pi), "start permutation is forbidden");
  Permutation current = inst.pi;
  for (std::size_t step = 1; step < descending.size(); ++step) {
    const VertexSet& prev = descending[step - 1];
    const VertexSet& next = descending[step];
    HYSTCON_CHECK(is_subset(next, prev) && next.level() + 1 == prev.level(),
                  "path step does not remove exactly one unit");
    int removed = 0;
    for (int e : prev.elements()) {
      if (!next.contains(e)) removed = e;
    }
    const auto [i, j] = red.positions[static_cast<std::size_t>(removed - 1)];
    current = apply_exchange(current, i, j);
    HYSTCON_CHECK(!banned.contains(current), "intermediate " + to_string(current) + " is forbidden");
    out.swaps.emplace_back(i, j);
    out.intermediates.push_back(current);
  }
  HYSTCON_CHECK(current.is_identity(), "sequence does not end at the identity");
  const std::size_t optimum =
      inst.ops == OpModel::exchange ? cayley_distance(inst.pi) : inversions(inst.pi).size();
  HYSTCON_CHECK(out.swaps.size() == optimum, "sequence is not optimal");
  return out;
}

/// Optimal avoiding sequence, or nullopt when none exists (or when it is
/// longer than k_bound).
inline std::optional<ExchangeSequence> sort_guided(const GuidedSortingInstance& inst) {
  detail::require_sizes(inst);
  detail::require_shape(inst.pi, inst.ops);
  if (std::find(inst.forbidden.begin(), inst.forbidden.end(), inst.pi) != inst.forbidden.end()) {
    return std::nullopt;
  }
  const Reduction red = reduce_to_hystcon(inst);
  const std::size_t k = red.positions.size();
  if (inst.k_bound && *inst.k_bound < k) return std::nullopt;
  const SolveOutcome res = solve(red.instance, Mode::search);
  if (!res.yes) return std::nullopt;
  std::vector<VertexSet> descending(res.path.rbegin(), res.path.rend());
  return translate_solution(descending, red, inst);
}

}  // namespace hystcon

#endif  // HYSTCON_GUIDED_SORTING_HPP_
