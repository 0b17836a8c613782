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

#ifndef TREEDIST_COST_H_
#define TREEDIST_COST_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "treedist/rational.h"

namespace treedist {

// The blank symbol (lambda). Never a valid node label: labels are drawn
// from [A-Za-z0-9_]+.
inline constexpr std::string_view kBlank = "-";

// A nonnegative cost measured in integer ticks of 1/denominator, where the
// denominator is fixed by the CostModel that produced it. Addition saturates
// at Infinity(), so +inf + x == +inf and nothing overflows.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(std::int64_t ticks) : ticks_(ticks) {}

  static constexpr Cost Infinity() { return Cost(kInfTicks); }

  constexpr std::int64_t ticks() const { return ticks_; }
  constexpr bool is_infinite() const { return ticks_ >= kInfTicks; }

  constexpr Cost& operator+=(Cost other) {
    if (is_infinite() || other.is_infinite()) {
      ticks_ = kInfTicks;
    } else {
      ticks_ += other.ticks_;
      if (ticks_ >= kInfTicks) ticks_ = kInfTicks;
    }
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr Cost operator*(std::int64_t k, Cost c) {
    return c.is_infinite() ? c : Cost(k * c.ticks_);
  }

  friend constexpr auto operator<=>(Cost, Cost) = default;

 private:
  // Large enough for any realistic sum, small enough that adding two finite
  // costs below it cannot overflow int64.
  static constexpr std::int64_t kInfTicks =
      std::numeric_limits<std::int64_t>::max() / 4;

  std::int64_t ticks_ = 0;
};

// Relabel metric over an explicit alphabet. Entries may include the blank
// symbol kBlank to price classic deletions and insertions.
class RelabelTable {
 public:
  RelabelTable() = default;

  // Validates on construction: every pair over the alphabet present (after
  // filling the diagonal with 0 and mirroring one-sided entries), symmetric,
  // positive definite, triangle inequality. Throws CostModelError naming the
  // violated property.
  RelabelTable(std::vector<std::string> alphabet,
               const std::vector<std::tuple<std::string, std::string,
                                            Rational>>& entries);

  // Parses the cost table file format: a header line
  // "alphabet: <symbols comma-separated>" followed by "x,y,cost" lines.
  static RelabelTable Parse(std::string_view text);
  static RelabelTable Load(const std::string& path);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  bool has_blank() const { return has_blank_; }

  // Throws UnknownSymbolError for symbols outside the alphabet.
  Rational Get(std::string_view x, std::string_view y) const;

 private:
  int IndexOf(std::string_view symbol) const;

  std::vector<std::string> alphabet_;  // kBlank appended when present
  bool has_blank_ = false;
  std::vector<std::vector<Rational>> cost_;
};

// Relabel metric, blank costs and affine gap cost w(k) = a + b*k shared by
// every distance module. Immutable once built.
class CostModel {
 public:
  // p(x,y) = 0 if x == y else 1; blank costs 1.
  static CostModel Unit(Rational gap_open = 0, Rational gap_extend = 1);
  static CostModel FromTable(RelabelTable table, Rational gap_open = 0,
                             Rational gap_extend = 1);

  // Same relabel metric, but classic deletions and insertions cost `indel`
  // for every symbol. Used to compare gap models against classic distance.
  CostModel WithIndelCost(Rational indel) const;

  Rational gap_open() const { return gap_open_; }
  Rational gap_extend() const { return gap_extend_; }

  // Ticks per unit cost. Every Cost produced by this model is an integer
  // multiple of 1/denominator().
  std::int64_t denominator() const { return denominator_; }

  // w(k): 0 for k == 0, a + b*k otherwise.
  Cost GapCost(std::int64_t k) const;
  Cost GapOpen() const { return ToCost(gap_open_); }
  Cost GapExtend() const { return ToCost(gap_extend_); }

  // x or y may be kBlank (classic deletion / insertion).
  Cost RelabelCost(std::string_view x, std::string_view y) const;
  Cost DeleteCost(std::string_view x) const { return RelabelCost(x, kBlank); }
  Cost InsertCost(std::string_view y) const { return RelabelCost(kBlank, y); }

  Cost ToCost(const Rational& value) const;
  Rational ToRational(Cost cost) const;
  std::string Format(Cost cost) const;

 private:
  CostModel(std::optional<RelabelTable> table, Rational gap_open,
            Rational gap_extend);
  void RecomputeDenominator();

  std::optional<RelabelTable> table_;
  std::optional<Rational> indel_override_;
  Rational gap_open_;
  Rational gap_extend_;
  std::int64_t denominator_ = 1;
};

}  // namespace treedist

#endif  // TREEDIST_COST_H_
