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

#include "treedist/seq_align.h"

#include <algorithm>
#include <string>
#include <vector>

#include "alignment_enumeration.h"
#include "gtest/gtest.h"
#include "treedist/errors.h"

namespace treedist {
namespace {

using reference::EnumerateBest;

// Single-matrix edit distance with indel cost b and unit substitution.
Rational Levenshtein(const std::string& s1, const std::string& s2,
                     Rational b) {
  const std::size_t m = s1.size();
  const std::size_t n = s2.size();
  std::vector<std::vector<Rational>> d(m + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= m; ++i) {
    d[i][0] = b * Rational(static_cast<std::int64_t>(i));
  }
  for (std::size_t j = 0; j <= n; ++j) {
    d[0][j] = b * Rational(static_cast<std::int64_t>(j));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      d[i][j] = std::min({d[i - 1][j] + b, d[i][j - 1] + b,
                          d[i - 1][j - 1] +
                              Rational(s1[i - 1] == s2[j - 1] ? 0 : 1)});
    }
  }
  return d[m][n];
}

std::vector<std::string> StringsUpTo(int n) {
  std::vector<std::string> out = {""};
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (static_cast<int>(out[k].size()) == n) continue;
    out.push_back(out[k] + "A");
    out.push_back(out[k] + "B");
  }
  return out;
}

void ExpectWellFormed(const Alignment& al, const std::string& s1,
                      const std::string& s2, const CostModel& m) {
  std::string back1;
  std::string back2;
  for (const auto& [x, y] : al.columns) {
    ASSERT_FALSE(x == kBlank && y == kBlank);
    if (x != kBlank) back1 += x;
    if (y != kBlank) back2 += y;
  }
  EXPECT_EQ(back1, s1);
  EXPECT_EQ(back2, s2);
  EXPECT_EQ(PriceAlignment(al.columns, m), al.distance);
}

TEST(AlignTest, IdenticalIsFree) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {3, 2}}) {
    const auto m = CostModel::Unit(a, b);
    EXPECT_EQ(Align("ab", "ab", m).distance, Cost(0));
  }
}

TEST(AlignTest, EmptyAgainstThree) {
  const auto m = CostModel::Unit(1, 2);
  const auto al = Align("", "xyz", m);
  EXPECT_EQ(m.Format(al.distance), "7");
  EXPECT_EQ(AlignmentRows(al.columns).first, "---");
}

TEST(AlignTest, InitializationRows) {
  const auto m = CostModel::Unit(1, 2);
  const auto al = Align("ab", "xyz", m);
  const auto& t = al.tables;
  EXPECT_EQ(t.match(0, 0), Cost(0));
  for (int j = 1; j <= 3; ++j) {
    EXPECT_TRUE(t.match(0, j).is_infinite());
    EXPECT_EQ(m.Format(t.gap_left(0, j)), std::to_string(1 + 2 * j));
    EXPECT_TRUE(t.gap_right(0, j).is_infinite());
  }
  for (int i = 0; i <= 2; ++i) EXPECT_TRUE(t.gap_left(i, 0).is_infinite());
  for (int i = 1; i <= 2; ++i) {
    EXPECT_TRUE(t.match(i, 0).is_infinite());
    EXPECT_EQ(m.Format(t.gap_right(i, 0)), std::to_string(1 + 2 * i));
  }
}

TEST(AlignTest, SaveSalvageMatchesEnumeration) {
  const auto m = CostModel::Unit(1, 1);
  const auto al = Align("save", "salvage", m);
  EXPECT_EQ(m.ToRational(al.distance),
            EnumerateBest("save", "salvage", 1, 1));
  ExpectWellFormed(al, "save", "salvage", m);
}

TEST(AlignTest, TwoGapsCostTwoOpensThreeExtends) {
  // Gaps of length 1 and 2 in one row: (a + b) + (a + 2b).
  const auto m = CostModel::Unit(10, 1);
  const std::vector<AlignColumn> cols = {
      {"s", "s"}, {"-", "x"}, {"a", "a"}, {"-", "y"}, {"-", "z"}};
  EXPECT_EQ(m.Format(PriceAlignment(cols, m)), "23");
}

TEST(AlignTest, RejectsBlankSymbol) {
  EXPECT_THROW(Align("a-b", "ab", CostModel::Unit()), Error);
}

TEST(AlignTest, TableCosts) {
  const auto table = RelabelTable::Parse("alphabet: A,B\nA,B,1/2\n");
  const auto m = CostModel::FromTable(table, 1, 1);
  EXPECT_EQ(m.Format(Align("A", "B", m).distance), "1/2");
  EXPECT_THROW(Align("A", "C", m), UnknownSymbolError);
}

class AlignSuiteTest
    : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(AlignSuiteTest, MatchesEnumerationUpToFour) {
  const auto [a, b] = GetParam();
  const auto m = CostModel::Unit(a, b);
  for (const auto& x : StringsUpTo(4)) {
    for (const auto& y : StringsUpTo(4)) {
      const auto al = Align(x, y, m);
      ASSERT_EQ(m.ToRational(al.distance), EnumerateBest(x, y, a, b))
          << '"' << x << "\" vs \"" << y << '"';
      ExpectWellFormed(al, x, y, m);
      ASSERT_EQ(al.distance, Align(y, x, m).distance);
      ASSERT_EQ(al.distance, BruteForceAlignmentCost(x, y, m));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(GapSettings, AlignSuiteTest,
                         ::testing::Values(std::pair{0, 1}, std::pair{1, 1},
                                           std::pair{2, 1}, std::pair{1, 3}));

TEST(AlignTest, ZeroOpenIsLevenshtein) {
  for (int b : {1, 2, 3}) {
    const auto m = CostModel::Unit(0, b);
    for (const auto& x : StringsUpTo(5)) {
      for (const auto& y : StringsUpTo(5)) {
        ASSERT_EQ(m.ToRational(Align(x, y, m).distance),
                  Levenshtein(x, y, b));
      }
    }
  }
}

}  // namespace
}  // namespace treedist
