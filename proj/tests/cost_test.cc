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

#include "treedist/cost.h"

#include <random>

#include "gtest/gtest.h"
#include "treedist/errors.h"
#include "treedist/rational.h"

namespace treedist {
namespace {

TEST(RationalTest, ParseForms) {
  EXPECT_EQ(*Rational::Parse("3"), Rational(3));
  EXPECT_EQ(*Rational::Parse("-3"), Rational(-3));
  EXPECT_EQ(*Rational::Parse("6/4"), Rational(3, 2));
  EXPECT_EQ(*Rational::Parse("2.75"), Rational(11, 4));
  EXPECT_EQ(*Rational::Parse("-0.5"), Rational(-1, 2));
  EXPECT_EQ(*Rational::Parse(".5"), Rational(1, 2));
  EXPECT_FALSE(Rational::Parse(""));
  EXPECT_FALSE(Rational::Parse("x"));
  EXPECT_FALSE(Rational::Parse("1/0"));
  EXPECT_FALSE(Rational::Parse("1.2.3"));
  EXPECT_FALSE(Rational::Parse("1."));
}

TEST(RationalTest, LowestTermsAndFloor) {
  EXPECT_EQ(Rational(4, -6).ToString(), "-2/3");
  EXPECT_EQ(Rational(10, 5).ToString(), "2");
  EXPECT_EQ(Rational(-7, 2).Floor(), -4);
  EXPECT_EQ(Rational(7, 2).Floor(), 3);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(CostTest, InfinitySaturates) {
  const Cost inf = Cost::Infinity();
  EXPECT_TRUE((inf + Cost(5)).is_infinite());
  EXPECT_TRUE((inf + inf).is_infinite());
  EXPECT_LT(Cost(1000000), inf);
}

TEST(GapCostTest, ZeroLengthIsFree) {
  const auto m = CostModel::Unit(2, 3);
  EXPECT_EQ(m.GapCost(0), Cost(0));
}

TEST(GapCostTest, DirectSubstitution) {
  const auto m = CostModel::Unit(2, 3);
  EXPECT_EQ(m.Format(m.GapCost(1)), "5");
  EXPECT_EQ(m.Format(m.GapCost(4)), "14");
}

TEST(GapCostTest, ConvexityProbe) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 50);
  std::uniform_int_distribution<int> den(1, 7);
  for (int k = 0; k < 100; ++k) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng) + 1, den(rng));
    const auto m = CostModel::Unit(a, b);
    EXPECT_LE(m.GapCost(5), m.GapCost(2) + m.GapCost(3));
  }
}

TEST(GapCostTest, SubadditiveExhaustive) {
  const auto m = CostModel::Unit(Rational(3, 2), Rational(1, 3));
  for (int k1 = 1; k1 <= 64; ++k1) {
    for (int k2 = 1; k2 <= 64; ++k2) {
      ASSERT_LE(m.GapCost(k1 + k2), m.GapCost(k1) + m.GapCost(k2));
    }
  }
}

TEST(GapCostTest, RejectsBadParameters) {
  EXPECT_THROW(CostModel::Unit(-1, 1), CostModelError);
  EXPECT_THROW(CostModel::Unit(0, 0), CostModelError);
  EXPECT_NO_THROW(CostModel::Unit(0, Rational(1, 1000)));
}

TEST(RelabelCostTest, Unit) {
  const auto m = CostModel::Unit();
  EXPECT_EQ(m.RelabelCost("a", "a"), Cost(0));
  EXPECT_EQ(m.Format(m.RelabelCost("a", "b")), "1");
  EXPECT_EQ(m.Format(m.RelabelCost("a", kBlank)), "1");
  EXPECT_EQ(m.Format(m.RelabelCost(kBlank, "b")), "1");
}

TEST(RelabelCostTest, FractionalGapScalesTicks) {
  const auto m = CostModel::Unit(Rational(1, 2), Rational(1, 3));
  EXPECT_EQ(m.denominator(), 6);
  EXPECT_EQ(m.Format(m.GapCost(1)), "5/6");
  EXPECT_EQ(m.Format(m.RelabelCost("a", "b")), "1");
}

TEST(RelabelTableTest, ParsesAndMirrors) {
  const auto table = RelabelTable::Parse(
      "alphabet: a,b,c\n"
      "a,b,1/2\n"
      "b,c,1\n"
      "a,c,3/2\n");
  EXPECT_EQ(table.Get("b", "a"), Rational(1, 2));
  EXPECT_EQ(table.Get("c", "c"), Rational(0));
  const auto m = CostModel::FromTable(table);
  EXPECT_EQ(m.Format(m.RelabelCost("a", "c")), "3/2");
  // No blank entries: classic blank cost defaults to 1.
  EXPECT_EQ(m.Format(m.DeleteCost("a")), "1");
  EXPECT_THROW(m.RelabelCost("a", "z"), UnknownSymbolError);
  EXPECT_THROW(m.DeleteCost("z"), UnknownSymbolError);
}

TEST(RelabelTableTest, BlankEntries) {
  const auto table = RelabelTable::Parse(
      "alphabet: a,b\n"
      "a,b,1\n"
      "a,-,2\n"
      "-,b,3/2\n");
  const auto m = CostModel::FromTable(table);
  EXPECT_EQ(m.Format(m.DeleteCost("a")), "2");
  EXPECT_EQ(m.Format(m.InsertCost("b")), "3/2");
}

TEST(RelabelTableTest, NamedValidationErrors) {
  auto kind_of = [](const char* text) -> std::string {
    try {
      RelabelTable::Parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return "ok";
  };
  EXPECT_EQ(kind_of("alphabet: a,b\na,b,1\nb,a,2\n"), "Asymmetric");
  EXPECT_EQ(kind_of("alphabet: a,b\na,b,0\n"), "NotPositiveDefinite");
  EXPECT_EQ(kind_of("alphabet: a,b\na,b,1\na,a,1\n"), "NotPositiveDefinite");
  EXPECT_EQ(kind_of("alphabet: a,b,c\na,b,1\nb,c,1\na,c,3\n"),
            "TriangleInequality");
  EXPECT_EQ(kind_of("alphabet: a,b,c\na,b,1\nb,c,1\n"), "MissingEntry");
  EXPECT_EQ(kind_of("alphabet: a,b\na,z,1\n"), "UnknownSymbol");
  EXPECT_EQ(kind_of("a,b,1\n"), "ParseError");
  EXPECT_EQ(kind_of("alphabet: a,b\na,b\n"), "ParseError");
  EXPECT_EQ(kind_of("alphabet: a,b\na,b,one\n"), "ParseError");
  EXPECT_EQ(kind_of("alphabet: a,b\na,b,1\n"), "ok");
}

}  // namespace
}  // namespace treedist
