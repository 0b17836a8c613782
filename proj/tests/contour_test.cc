// Copyright 2026 The treedist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "treedist/contour.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "treedist/errors.h"
#include "treedist/oracle.h"
#include "treedist/ted_gap.h"

namespace treedist {
namespace {

// Two peaks (5 and 6) separated by a valley cell of height 3, inside a flat
// boundary at 0.
constexpr char kTwoPeaks[] =
    "0,0,0,0,0\n"
    "0,5,3,6,0\n"
    "0,4,2,4,0\n"
    "0,1,1,1,0\n"
    "0,0,0,0,0\n";

constexpr char kOnePeak[] =
    "0,0,0,0,0\n"
    "0,7,7,7,0\n"
    "0,7,10,7,0\n"
    "0,7,7,7,0\n"
    "0,0,0,0,0\n";

// kTwoPeaks plus a low bump in the bottom-left corner.
constexpr char kTwoPeaksBump[] =
    "0,0,0,0,0\n"
    "0,5,3,6,0\n"
    "0,4,2,4,0\n"
    "0,1,1,1,0\n"
    "1/2,0,0,0,0\n";

int CountExtrema(const Terrain& t) {
  int count = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    bool lowest = true;
    bool highest = true;
    for (int u : t.Neighbors(v)) {
      if (t.rank(u) < t.rank(v)) lowest = false;
      if (t.rank(u) > t.rank(v)) highest = false;
    }
    count += lowest + highest;
  }
  return count;
}

void CheckInvariants(const Terrain& terrain, const ContourTree& ct) {
  const int n = static_cast<int>(ct.nodes.size());
  ASSERT_EQ(static_cast<int>(ct.edges.size()), n - 1);
  ASSERT_EQ(ct.tree.size(), n);
  std::vector<int> degree(n, 0);
  std::vector<int> up(n, 0);
  std::vector<int> down(n, 0);
  for (auto [u, v] : ct.edges) {
    ++degree[u];
    ++degree[v];
    const bool u_low = terrain.rank(ct.nodes[u].vertex) <
                       terrain.rank(ct.nodes[v].vertex);
    ++(u_low ? up[u] : down[u]);
    ++(u_low ? down[v] : up[v]);
  }
  int leaves = 0;
  for (int k = 0; k < n; ++k) {
    ASSERT_NE(degree[k], 2) << "regular vertex kept";
    if (degree[k] == 1) ++leaves;
    switch (ct.nodes[k].type) {
      case CriticalType::kMin:
        ASSERT_EQ(down[k], 0);
        ASSERT_EQ(degree[k], 1);
        break;
      case CriticalType::kMax:
        ASSERT_EQ(up[k], 0);
        ASSERT_EQ(degree[k], 1);
        break;
      default:
        ASSERT_GE(degree[k], 3);
    }
  }
  ASSERT_EQ(leaves, CountExtrema(terrain));
  ASSERT_EQ(ct.tree.label(0).rfind("min_", 0), 0u);
}

TEST(TerrainTest, ParsesSmallGrid) {
  const auto t = Terrain::Parse("1,2\n3,4");
  EXPECT_EQ(t.rows(), 2);
  EXPECT_EQ(t.cols(), 2);
  EXPECT_EQ(t.height(3), Rational(4));
}

TEST(TerrainTest, RejectsBadInput) {
  EXPECT_THROW(Terrain::Parse("1,2\n3"), TerrainError);
  EXPECT_THROW(Terrain::Parse("1,x\n3,4"), TerrainError);
  EXPECT_THROW(Terrain::Parse("1,2"), TerrainError);
  EXPECT_THROW(Terrain::Parse(""), TerrainError);
}

TEST(TerrainTest, TiesBrokenByIndex) {
  const auto t = Terrain::Parse("1,1\n1,1");
  for (int v = 0; v < 4; ++v) EXPECT_EQ(t.rank(v), v);
}

TEST(TerrainTest, DiagonalNeighbors) {
  const auto t = Terrain::Parse("1,2,3\n4,5,6\n7,8,9");
  auto nb = t.Neighbors(4);
  std::sort(nb.begin(), nb.end());
  EXPECT_EQ(nb, (std::vector<int>{0, 1, 3, 5, 7, 8}));
}

TEST(ContourTreeTest, Ramp) {
  const auto t = Terrain::Parse("1,2,3\n4,5,6\n7,8,9");
  const auto ct = BuildContourTree(t);
  EXPECT_EQ(ct.nodes.size(), 2u);
  EXPECT_EQ(ct.edges.size(), 1u);
  EXPECT_EQ(ct.tree.ToBracket(), "min_1(max_9)");
}

TEST(ContourTreeTest, SinglePeak) {
  const auto t = Terrain::Parse(kOnePeak);
  const auto ct = BuildContourTree(t);
  EXPECT_EQ(ct.nodes.size(), 2u);
  EXPECT_EQ(ct.tree.ToBracket(), "min_0(max_10)");
  CheckInvariants(t, ct);
}

TEST(ContourTreeTest, TwoPeaks) {
  const auto t = Terrain::Parse(kTwoPeaks);
  const auto ct = BuildContourTree(t);
  EXPECT_EQ(ct.nodes.size(), 4u);
  EXPECT_EQ(ct.edges.size(), 3u);
  EXPECT_EQ(ct.tree.ToBracket(), "min_0(saddlepos_3(max_5,max_6))");
  CheckInvariants(t, ct);
}

TEST(ContourTreeTest, QuantumBuckets) {
  const auto t = Terrain::Parse(kTwoPeaks);
  EXPECT_EQ(BuildContourTree(t, Rational(2)).tree.ToBracket(),
            "min_0(saddlepos_1(max_2,max_3))");
  EXPECT_EQ(HeightBucketLabel(CriticalType::kMin, Rational(-3, 2), Rational(1)),
            "min_n2");
  EXPECT_EQ(HeightBucketLabel(CriticalType::kJoinSaddle, Rational(3),
                              Rational(1)),
            "saddleneg_3");
}

TEST(ContourTreeTest, PitsGiveJoinSaddle) {
  // Negated two-peak terrain: two pits merge at a join saddle.
  const auto t = Terrain::Parse(
      "0,0,0,0,0\n"
      "0,-5,-3,-6,0\n"
      "0,-4,-2,-4,0\n"
      "0,-1,-1,-1,0\n"
      "0,0,0,0,0\n");
  const auto ct = BuildContourTree(t);
  int joins = 0;
  for (const auto& node : ct.nodes) joins += node.type == CriticalType::kJoinSaddle;
  EXPECT_EQ(joins, 1);
  CheckInvariants(t, ct);
}

TEST(ContourTreeTest, RandomSixBySix) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> h(0, 9);
  for (int k = 0; k < 100; ++k) {
    std::vector<Rational> heights;
    for (int v = 0; v < 36; ++v) heights.emplace_back(h(rng));
    const Terrain t(6, 6, heights);
    const auto ct = BuildContourTree(t);
    CheckInvariants(t, ct);
    if (HasFailure()) {
      ADD_FAILURE() << "sample " << k;
      return;
    }
  }
}

TEST(CompareTerrainsTest, SelfIsZero) {
  const auto t = Terrain::Parse(kTwoPeaks);
  EXPECT_EQ(CompareTerrains(t, t, CostModel::Unit(1, 1)).distance, Cost(0));
}

TEST(CompareTerrainsTest, TwoPeaksVersusOneMatchesOracle) {
  const auto m = CostModel::Unit(1, 1);
  const auto r =
      CompareTerrains(Terrain::Parse(kTwoPeaks), Terrain::Parse(kOnePeak), m);
  EXPECT_EQ(r.distance,
            OracleDistance(r.tree1, r.tree2, m, MappingModel::kSubtreeGap)
                .distance);
}

TEST(CompareTerrainsTest, BumpMatchesOracle) {
  const auto m = CostModel::Unit(1, 1);
  const auto r = CompareTerrains(Terrain::Parse(kTwoPeaks),
                                 Terrain::Parse(kTwoPeaksBump), m);
  EXPECT_EQ(r.tree2.size(), r.tree1.size() + 2);
  EXPECT_EQ(r.distance,
            OracleDistance(r.tree1, r.tree2, m, MappingModel::kSubtreeGap)
                .distance);
  // The bump's saddle sits above the old subtree, so it is not one complete
  // subtree of the new tree and costs more than a single gap.
  EXPECT_GT(r.distance, m.GapCost(2));
}

}  // namespace
}  // namespace treedist
