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


#include <gtest/gtest.h>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "hystcon/generators.hpp"
#include "hystcon/lehman_ron.hpp"
#include "support.hpp"

namespace hystcon {
namespace {

using testing::set_of;

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

LehmanRonInstance two_pair_instance() {
  LehmanRonInstance inst;
  inst.n = 3;
  inst.r_family = {set_of(3, {1}), set_of(3, {2})};
  inst.s_family = {set_of(3, {1, 2}), set_of(3, {2, 3})};
  inst.phi = {0, 1};
  return inst;
}

// Some assignment of R members to S members by containment, one each.
bool disjoint_system_exists(const LehmanRonInstance& inst) {
  std::vector<int> order(inst.s_family.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      ok = is_subset(inst.r_family[i], inst.s_family[static_cast<std::size_t>(order[i])]);
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

TEST(LehmanRonTest, SinglePairGivesOneChain) {
  LehmanRonInstance inst;
  inst.n = 2;
  inst.r_family = {VertexSet(2)};
  inst.s_family = {VertexSet::full(2)};
  inst.phi = {0};
  const auto out = compute_lehman_ron_paths(inst);
  ASSERT_EQ(out.paths.size(), 1U);
  ASSERT_EQ(out.paths[0].size(), 3U);
  EXPECT_EQ(out.paths[0].front(), VertexSet(2));
  EXPECT_EQ(out.paths[0].back(), VertexSet::full(2));
  EXPECT_TRUE(validate_disjoint_paths(out, inst));
}

TEST(LehmanRonTest, TwoPairsGiveDisjointChains) {
  const auto inst = two_pair_instance();
  ASSERT_TRUE(disjoint_system_exists(inst));
  const auto out = compute_lehman_ron_paths(inst);
  EXPECT_TRUE(validate_disjoint_paths(out, inst));
}

TEST(LehmanRonTest, RejectsInvalidInstances) {
  auto inst = two_pair_instance();
  inst.phi = {0, 0};
  EXPECT_THROW(compute_lehman_ron_paths(inst), UsageError);
  inst = two_pair_instance();
  inst.phi = {1, 0};  // {1} is not below {2,3}
  EXPECT_THROW(compute_lehman_ron_paths(inst), UsageError);
  inst = two_pair_instance();
  inst.s_family[1] = set_of(3, {1, 2});
  EXPECT_THROW(compute_lehman_ron_paths(inst), UsageError);
}

TEST(ComputeQTest, KeepsDownNeighborsAboveSomeR) {
  auto sorted = [](std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(compute_q({VertexSet(2)}, {VertexSet::full(2)}, 2),
            sorted({set_of(2, {1}), set_of(2, {2})}));
  EXPECT_EQ(compute_q({set_of(3, {1})}, {VertexSet::full(3)}, 3),
            sorted({set_of(3, {1, 2}), set_of(3, {1, 3})}));
}

TEST(SplitGraphTest, SmallInstanceHasPerfectMatching) {
  const std::vector<VertexSet> r{VertexSet(2)};
  const std::vector<VertexSet> q{set_of(2, {1}), set_of(2, {2})};
  const std::vector<VertexSet> s{VertexSet::full(2)};
  const BipartiteGraph g = build_split_bipartite(r, q, s);
  ASSERT_EQ(g.left_size(), 3U);
  ASSERT_EQ(g.right_size(), 3U);
  // R_0 -> Q_in 0, Q_out 0 -> S_0, Q_out 1 -> Q_in 1.
  EXPECT_TRUE(g.has_edge(0, 0));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  Matching m(3, 3);
  m.add(0, 0);
  m.add(1, 2);
  m.add(2, 1);
  ASSERT_TRUE(is_valid_matching(g, m));
  EXPECT_EQ(testing::kuhn_max_matching(g), 3U);
  const auto triples = extract_triples(m, r, q, s);
  ASSERT_EQ(triples.size(), 1U);
  EXPECT_EQ(triples[0].r, VertexSet(2));
  EXPECT_EQ(triples[0].q, set_of(2, {1}));
  EXPECT_EQ(triples[0].s, VertexSet::full(2));
}

TEST(SplitGraphTest, EmptyQHasNoPerfectMatching) {
  const std::vector<VertexSet> r{VertexSet(2)};
  const std::vector<VertexSet> s{VertexSet::full(2)};
  const BipartiteGraph g = build_split_bipartite(r, {}, s);
  EXPECT_EQ(g.edge_count(), 0U);
  EXPECT_EQ(testing::kuhn_max_matching(g), 0U);
}

// Five R, five Q, five S; each Q touches two R and two S in a ring.
TEST(SplitGraphTest, RingShapeHasPerfectMatchingOfTen) {
  const int rq[5][2] = {{0, 3}, {0, 1}, {1, 2}, {2, 4}, {3, 4}};
  const int qs[5][2] = {{0, 3}, {0, 1}, {1, 2}, {2, 4}, {3, 4}};
  BipartiteGraph g(10, 10);
  for (int i = 0; i < 5; ++i) {
    for (int q : rq[i]) g.add_edge(i, q);
  }
  for (int q = 0; q < 5; ++q) {
    g.add_edge(5 + q, q);
    for (int s : qs[q]) g.add_edge(5 + q, 5 + s);
  }
  const Matching m = hopcroft_karp_cutoff(g, kUnbounded);
  EXPECT_EQ(m.size(), 10U);
  EXPECT_EQ(testing::kuhn_max_matching(g), 10U);
}

TEST(LehmanRonTest, RandomInstancesValidate) {
  Rng rng(21);
  int done = 0;
  while (done < 200) {
    const std::size_t d = gen_detail::uniform(rng, 1, 4);
    const std::size_t n = gen_detail::uniform(rng, d, 10);
    const std::size_t m = gen_detail::uniform(rng, 1, 8);
    LehmanRonInstance inst;
    try {
      inst = random_lehman_ron(m, n, d, rng);
    } catch (const UsageError&) {
      continue;
    }
    ++done;
    const auto out = compute_lehman_ron_paths(inst);
    ASSERT_TRUE(validate_disjoint_paths(out, inst)) << to_json(inst);
    if (d >= 2) {
      const auto q = compute_q(inst.r_family, inst.s_family, n);
      EXPECT_GE(q.size(), m);
      const BipartiteGraph g = build_split_bipartite(inst.r_family, q, inst.s_family);
      const Matching mt = hopcroft_karp_cutoff(g, kUnbounded);
      ASSERT_EQ(mt.size(), g.left_size());
      for (const auto& t : extract_triples(mt, inst.r_family, q, inst.s_family)) {
        EXPECT_TRUE(is_subset(t.r, t.q));
        EXPECT_TRUE(is_subset(t.q, t.s));
        EXPECT_EQ(t.q.level() + 1, t.s.level());
      }
    }
  }
}

TEST(ValidateDisjointPathsTest, RejectsSharedVertex) {
  LehmanRonInstance inst;
  inst.n = 4;
  inst.r_family = {set_of(4, {1}), set_of(4, {2})};
  inst.s_family = {set_of(4, {1, 2, 3}), set_of(4, {1, 2, 4})};
  inst.phi = {0, 1};
  DisjointPathSet out;
  out.paths = {{set_of(4, {1}), set_of(4, {1, 2}), set_of(4, {1, 2, 3})},
               {set_of(4, {2}), set_of(4, {1, 2}), set_of(4, {1, 2, 4})}};
  EXPECT_FALSE(validate_disjoint_paths(out, inst));
}

TEST(ValidateDisjointPathsTest, RejectsLevelSkip) {
  LehmanRonInstance inst;
  inst.n = 3;
  inst.r_family = {VertexSet(3)};
  inst.s_family = {set_of(3, {1, 2})};
  inst.phi = {0};
  DisjointPathSet out;
  out.paths = {{VertexSet(3), set_of(3, {1, 2}), set_of(3, {1, 2})}};
  EXPECT_FALSE(validate_disjoint_paths(out, inst));
  out.paths = {{VertexSet(3), set_of(3, {1}), set_of(3, {1, 2})}};
  EXPECT_TRUE(validate_disjoint_paths(out, inst));
}

}  // namespace
}  // namespace hystcon
