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

#ifndef HYSTCON_TESTS_SUPPORT_HPP_
#define HYSTCON_TESTS_SUPPORT_HPP_

// Independent reference implementations shared by the tests.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hystcon/bipartite_matching.hpp"
#include "hystcon/vertex_set.hpp"

namespace hystcon::testing {

// Kuhn's augmenting-path maximum matching on a plain adjacency list.
inline std::size_t kuhn_max_matching(const BipartiteGraph& g) {
  const std::size_t left = g.left_size();
  std::vector<int> mate(g.right_size(), -1);
  std::size_t size = 0;
  for (std::size_t l = 0; l < left; ++l) {
    std::vector<char> seen(g.right_size(), 0);
    std::function<bool(int)> augment = [&](int u) {
      for (int r : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = 1;
        if (mate[static_cast<std::size_t>(r)] < 0 || augment(mate[static_cast<std::size_t>(r)])) {
          mate[static_cast<std::size_t>(r)] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(static_cast<int>(l))) ++size;
  }
  return size;
}

// Minimum vertex cover size: every left subset A kept, plus all right
// neighbors of the left vertices not in A.
inline std::size_t brute_force_min_cover(const BipartiteGraph& g) {
  const std::size_t left = g.left_size();
  std::size_t best = left + g.right_size();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << left); ++a) {
    std::set<int> right;
    for (std::size_t l = 0; l < left; ++l) {
      if ((a >> l) & 1U) continue;
      for (int r : g.neighbors(static_cast<int>(l))) right.insert(r);
    }
    best = std::min(best, static_cast<std::size_t>(std::popcount(a)) + right.size());
  }
  return best;
}

inline bool cover_is_valid(const BipartiteGraph& g, const VertexCover& c) {
  const std::set<int> left(c.left_nodes.begin(), c.left_nodes.end());
  const std::set<int> right(c.right_nodes.begin(), c.right_nodes.end());
  for (std::size_t l = 0; l < g.left_size(); ++l) {
    for (int r : g.neighbors(static_cast<int>(l))) {
      if (!left.contains(static_cast<int>(l)) && !right.contains(r)) return false;
    }
  }
  return true;
}

inline VertexSet set_of(std::size_t n, std::vector<int> el) { return VertexSet::from_elements(n, el); }

}  // namespace hystcon::testing

#endif  // HYSTCON_TESTS_SUPPORT_HPP_
