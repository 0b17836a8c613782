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

#include "treedist/oracle.h"

#include <cstdlib>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "treedist/errors.h"
#include "treedist/generate.h"

namespace treedist {
namespace {

LabeledTree T(const char* s) { return LabeledTree::Parse(s); }

long long CountMappings(const LabeledTree& t1, const LabeledTree& t2) {
  long long n = 0;
  EnumerateMappings(t1, t2, [&](const EditMapping&) { ++n; });
  return n;
}

long long Choose(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

TEST(EnumerateTest, SmallCounts) {
  EXPECT_EQ(CountMappings(T("a"), T("b")), 2);
  EXPECT_EQ(CountMappings(T("a(b)"), T("c")), 3);
}

TEST(EnumerateTest, SpinesAreChoosePairs) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      long long expect = 0;
      for (int k = 0; k <= std::min(m, n); ++k) {
        expect += Choose(m, k) * Choose(n, k);
      }
      EXPECT_EQ(CountMappings(PathTree(m), PathTree(n)), expect);
    }
  }
}

// Every subset of V1 x V2, filtered by the validity predicate, must be
// exactly what the enumerator produces.
TEST(EnumerateTest, AgreesWithSubsetFilter) {
  const auto shapes = ShapesUpTo(3);
  for (const auto& t1 : shapes) {
    for (const auto& t2 : shapes) {
      std::vector<std::pair<NodeId, NodeId>> all;
      for (NodeId v = 0; v < t1.size(); ++v) {
        for (NodeId w = 0; w < t2.size(); ++w) all.emplace_back(v, w);
      }
      std::set<std::vector<std::pair<NodeId, NodeId>>> expected;
      for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        EditMapping em;
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (mask >> k & 1) em.pairs.push_back(all[k]);
        }
        if (IsValidMapping(t1, t2, em)) expected.insert(em.pairs);
      }
      std::set<std::vector<std::pair<NodeId, NodeId>>> got;
      EnumerateMappings(t1, t2, [&](const EditMapping& em) {
        EditMapping copy = em;
        copy.Normalize();
        EXPECT_TRUE(got.insert(copy.pairs).second) << "duplicate mapping";
      });
      EXPECT_EQ(got, expected) << t1.ToBracket() << " vs " << t2.ToBracket();
    }
  }
}

TEST(PriceTest, EmptyMapping) {
  const auto t1 = T("a(b,c)");
  const auto t2 = T("d(e)");
  const EditMapping none;
  const auto m = CostModel::Unit(3, 2);
  EXPECT_EQ(m.Format(*PriceMapping(t1, t2, none, m, MappingModel::kClassic)),
            "5");
  // Whole trees are one gap each: (a + 3b) + (a + 2b).
  EXPECT_EQ(m.Format(*PriceMapping(t1, t2, none, m, MappingModel::kGeneralGap)),
            "16");
  EXPECT_EQ(m.Format(*PriceMapping(t1, t2, none, m, MappingModel::kSubtreeGap)),
            "16");
}

TEST(PriceTest, InnerDeletionInfeasibleForSubtreeModel) {
  const auto t1 = T("a(b(c))");
  const auto t2 = T("a(c)");
  const EditMapping em{{{0, 0}, {2, 1}}};
  const auto m = CostModel::Unit(1, 1);
  EXPECT_EQ(m.Format(*PriceMapping(t1, t2, em, m, MappingModel::kGeneralGap)),
            "2");
  EXPECT_FALSE(PriceMapping(t1, t2, em, m, MappingModel::kSubtreeGap));
}

TEST(PriceTest, TwoSiblingGaps) {
  const auto t1 = T("a(b,c)");
  const auto t2 = T("a");
  const EditMapping em{{{0, 0}}};
  const auto m = CostModel::Unit(2, 3);
  EXPECT_EQ(m.Format(*PriceMapping(t1, t2, em, m, MappingModel::kGeneralGap)),
            "10");
}

TEST(OracleTest, SizeCapAndOverride) {
  const auto big = PathTree(kDefaultOracleCap + 1);
  unsetenv("TREEDIST_MAX_ORACLE");
  EXPECT_THROW(OracleDistance(big, T("a"), CostModel::Unit(),
                              MappingModel::kClassic),
               SizeCapError);
  setenv("TREEDIST_MAX_ORACLE", "12", 1);
  EXPECT_EQ(OracleSizeCap(), 12);
  EXPECT_NO_THROW(OracleDistance(big, T("a"), CostModel::Unit(),
                                 MappingModel::kClassic));
  unsetenv("TREEDIST_MAX_ORACLE");
  EXPECT_EQ(OracleSizeCap(), kDefaultOracleCap);
}

TEST(OracleTest, ResultMappingIsOptimal) {
  const auto t1 = T("f(d(a,c),e)");
  const auto t2 = T("f(c,e)");
  const auto m = CostModel::Unit(1, 1);
  for (auto which : {MappingModel::kClassic, MappingModel::kGeneralGap,
                     MappingModel::kSubtreeGap}) {
    const auto r = OracleDistance(t1, t2, m, which);
    EXPECT_EQ(*PriceMapping(t1, t2, r.mapping, m, which), r.distance);
    EXPECT_LE(r.feasible, r.mappings);
  }
}

TEST(ShapePairOracleTest, MatchesDirectOracle) {
  const auto shapes = ShapesUpTo(4);
  const auto m = CostModel::Unit(2, 1);
  for (const auto& s1 : shapes) {
    for (const auto& s2 : shapes) {
      const ShapePairOracle spo(s1, s2);
      EXPECT_EQ(spo.mapping_count(), CountMappings(s1, s2));
      for (const auto& t1 : AllLabelings(s1, {"x", "y"})) {
        const auto t2 = AllLabelings(s2, {"x", "y"}).back();
        for (auto which : {MappingModel::kClassic, MappingModel::kGeneralGap,
                           MappingModel::kSubtreeGap}) {
          ASSERT_EQ(spo.Distance(t1, t2, m, which),
                    OracleDistance(t1, t2, m, which).distance);
        }
      }
    }
  }
}

}  // namespace
}  // namespace treedist
