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
#include <cstdlib>
#include <numeric>
#include <vector>

#include "hystcon/generators.hpp"
#include "hystcon/oracle.hpp"
#include "hystcon/solver.hpp"
#include "support.hpp"

namespace hystcon {
namespace {

using testing::set_of;

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

HystconInstance three_element() {
  return {3, VertexSet(3), VertexSet::full(3),
          {set_of(3, {2}), set_of(3, {3}), set_of(3, {1, 2}), set_of(3, {2, 3})}};
}

TEST(HypercubeOracleTest, ThreeElementPath) {
  const auto res = oracle_hystcon_bfs(three_element());
  ASSERT_TRUE(res.reachable);
  const std::vector<VertexSet> expected{VertexSet(3), set_of(3, {1}), set_of(3, {1, 3}),
                                        VertexSet::full(3)};
  EXPECT_EQ(*res.path, expected);
  EXPECT_EQ(*res.distance, 3U);
}

TEST(HypercubeOracleTest, NoForbiddenAlwaysReachable) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = gen_detail::uniform(rng, 1, 12);
    const auto inst = random_hystcon(n, gen_detail::uniform(rng, 0, n), 0, rng);
    EXPECT_TRUE(oracle_hystcon_bfs(inst).reachable);
  }
}

TEST(HypercubeOracleTest, FullLevelCutBlocks) {
  for (std::size_t d = 2; d <= 8; ++d) {
    HystconInstance inst{d, VertexSet(d), VertexSet::full(d), {}};
    for (int q = 1; q <= static_cast<int>(d); ++q) inst.forbidden.push_back(set_of(d, {q}));
    EXPECT_FALSE(oracle_hystcon_bfs(inst).reachable);
  }
}

TEST(HypercubeOracleTest, RefusesAboveCap) {
  HystconInstance inst{21, VertexSet(21), VertexSet::full(21), {}};
  EXPECT_THROW(oracle_hystcon_bfs(inst, OracleConfig{}), OracleCapExceeded);
  OracleConfig wide;
  wide.hypercube_cap = 21;
  EXPECT_TRUE(oracle_hystcon_bfs(inst, wide).reachable);
}

TEST(OracleConfigTest, EnvironmentOverridesEveryCap) {
  ::setenv("HYSTCON_ORACLE_CAP", "5", 1);
  const auto cfg = OracleConfig::from_env();
  ::unsetenv("HYSTCON_ORACLE_CAP");
  EXPECT_EQ(cfg.hypercube_cap, 5U);
  EXPECT_EQ(cfg.exchange_cap, 5U);
  EXPECT_EQ(cfg.adjacent_cap, 5U);
  ::setenv("HYSTCON_ORACLE_CAP", "lots", 1);
  EXPECT_THROW(OracleConfig::from_env(), UsageError);
  ::unsetenv("HYSTCON_ORACLE_CAP");
}

TEST(SortingOracleTest, ThreeCycleSolvedThroughSingleRoute) {
  GuidedSortingInstance inst{perm({2, 3, 1, 4}), {perm({1, 3, 2, 4}), perm({3, 2, 1, 4})},
                             OpModel::exchange, {}};
  const auto res = oracle_guided_sorting_bfs(inst);
  ASSERT_TRUE(res.reachable);
  EXPECT_EQ(*res.distance, 2U);
  EXPECT_EQ((*res.path)[1], perm({2, 1, 3, 4}));
  EXPECT_TRUE(validate_path(*res.path, inst));
}

TEST(SortingOracleTest, IdentityHasDistanceZero) {
  GuidedSortingInstance inst{Permutation::identity(5), {}, OpModel::exchange, {}};
  const auto res = oracle_guided_sorting_bfs(inst);
  ASSERT_TRUE(res.reachable);
  EXPECT_EQ(*res.distance, 0U);
}

TEST(SortingOracleTest, BothOrdersBlocked) {
  GuidedSortingInstance inst{perm({2, 1, 4, 3}), {perm({1, 2, 4, 3}), perm({2, 1, 3, 4})},
                             OpModel::exchange, {}};
  EXPECT_FALSE(oracle_guided_sorting_bfs(inst).reachable);
}

TEST(SortingOracleTest, RefusesAboveCap) {
  GuidedSortingInstance inst{Permutation::identity(9), {}, OpModel::exchange, {}};
  EXPECT_THROW(oracle_guided_sorting_bfs(inst, OracleConfig{}), OracleCapExceeded);
  EXPECT_THROW(oracle_cayley_bfs(inst, OracleConfig{}), OracleCapExceeded);
  inst.ops = OpModel::adjacent;
  EXPECT_NO_THROW(oracle_guided_sorting_bfs(inst, OracleConfig{}));
}

// Without forbidden permutations the restricted search must find the
// unrestricted optimum for every permutation of size up to six.
TEST(SortingOracleTest, RestrictedDistanceEqualsCayleyDistance) {
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 1);
    do {
      for (OpModel ops : {OpModel::exchange, OpModel::adjacent}) {
        GuidedSortingInstance inst{Permutation(images), {}, ops, {}};
        const auto restricted = oracle_guided_sorting_bfs(inst);
        const auto full = oracle_cayley_bfs(inst);
        ASSERT_TRUE(restricted.reachable);
        ASSERT_TRUE(full.reachable);
        EXPECT_EQ(*restricted.distance, *full.distance);
      }
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST(SortingOracleTest, ForbiddenSetsNeverShortenTheRestrictedSearch) {
  Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_sort_instance(gen_detail::uniform(rng, 2, 6), 8, rng);
    const auto restricted = oracle_guided_sorting_bfs(inst);
    const auto full = oracle_cayley_bfs(inst);
    if (restricted.reachable) {
      ASSERT_TRUE(full.reachable);
      EXPECT_EQ(*restricted.distance, *full.distance);
    }
  }
}

TEST(ValidatePathTest, HypercubePaths) {
  const auto inst = three_element();
  const auto good = *oracle_hystcon_bfs(inst).path;
  EXPECT_TRUE(validate_path(good, inst));
  auto through_forbidden = good;
  through_forbidden[1] = set_of(3, {2});
  EXPECT_FALSE(validate_path(through_forbidden, inst));
  const std::vector<VertexSet> jump{VertexSet(3), set_of(3, {1, 3}), VertexSet::full(3)};
  EXPECT_FALSE(validate_path(jump, inst));
  EXPECT_FALSE(validate_path({}, inst));
}

TEST(ValidatePathTest, SortingSequences) {
  GuidedSortingInstance inst{perm({2, 1, 4, 3}), {perm({1, 2, 4, 3})}, OpModel::exchange, {}};
  const std::vector<Permutation> good{perm({2, 1, 4, 3}), perm({2, 1, 3, 4}),
                                      Permutation::identity(4)};
  EXPECT_TRUE(validate_path(good, inst));
  const std::vector<Permutation> forbidden{perm({2, 1, 4, 3}), perm({1, 2, 4, 3}),
                                           Permutation::identity(4)};
  EXPECT_FALSE(validate_path(forbidden, inst));
  const std::vector<Permutation> long_way{perm({2, 1, 4, 3}), perm({2, 1, 3, 4}), perm({2, 3, 1, 4}),
                                          perm({2, 1, 3, 4}), Permutation::identity(4)};
  EXPECT_FALSE(validate_path(long_way, inst));
}

}  // namespace
}  // namespace hystcon
