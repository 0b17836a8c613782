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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "treedist/errors.h"

namespace treedist {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> SplitCommas(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    out.emplace_back(Trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

RelabelTable::RelabelTable(
    std::vector<std::string> alphabet,
    const std::vector<std::tuple<std::string, std::string, Rational>>&
        entries)
    : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) {
    throw CostModelError("EmptyAlphabet", "cost table alphabet is empty");
  }
  for (const auto& symbol : alphabet_) {
    if (symbol == kBlank) {
      throw CostModelError("BadAlphabet",
                           "the blank symbol '-' cannot be listed in the "
                           "alphabet");
    }
  }
  has_blank_ = std::any_of(entries.begin(), entries.end(), [](const auto& e) {
    return std::get<0>(e) == kBlank || std::get<1>(e) == kBlank;
  });
  if (has_blank_) alphabet_.emplace_back(kBlank);

  const std::size_t n = alphabet_.size();
  std::vector<std::vector<std::optional<Rational>>> raw(
      n, std::vector<std::optional<Rational>>(n));
  for (const auto& [x, y, cost] : entries) {
    const int i = IndexOf(x);
    const int j = IndexOf(y);
    if (i < 0) throw UnknownSymbolError(x);
    if (j < 0) throw UnknownSymbolError(y);
    if (cost < Rational(0)) {
      throw CostModelError("NegativeCost", "cost " + x + "," + y + " is " +
                                               cost.ToString());
    }
    if (raw[i][j] && *raw[i][j] != cost) {
      throw CostModelError("DuplicateEntry",
                           "conflicting entries for " + x + "," + y);
    }
    raw[i][j] = cost;
  }

  cost_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& forward = raw[i][j];
      const auto& backward = raw[j][i];
      if (forward && backward && *forward != *backward) {
        throw CostModelError("Asymmetric", "p(" + alphabet_[i] + "," +
                                               alphabet_[j] + ") != p(" +
                                               alphabet_[j] + "," +
                                               alphabet_[i] + ")");
      }
      if (forward) {
        cost_[i][j] = *forward;
      } else if (backward) {
        cost_[i][j] = *backward;
      } else if (i == j) {
        cost_[i][j] = Rational(0);
      } else {
        throw CostModelError("MissingEntry", "no cost given for " +
                                                 alphabet_[i] + "," +
                                                 alphabet_[j]);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (cost_[i][i] != Rational(0)) {
      throw CostModelError("NotPositiveDefinite",
                           "p(" + alphabet_[i] + "," + alphabet_[i] +
                               ") must be 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && cost_[i][j] <= Rational(0)) {
        throw CostModelError("NotPositiveDefinite",
                             "p(" + alphabet_[i] + "," + alphabet_[j] +
                                 ") must be positive");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (cost_[i][k] > cost_[i][j] + cost_[j][k]) {
          throw CostModelError("TriangleInequality",
                               "p(" + alphabet_[i] + "," + alphabet_[k] +
                                   ") exceeds p(" + alphabet_[i] + "," +
                                   alphabet_[j] + ") + p(" + alphabet_[j] +
                                   "," + alphabet_[k] + ")");
        }
      }
    }
  }
}

RelabelTable RelabelTable::Parse(std::string_view text) {
  std::vector<std::string> alphabet;
  std::vector<std::tuple<std::string, std::string, Rational>> entries;
  bool saw_header = false;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(offset, end - offset));
    const std::size_t line_offset = offset;
    offset = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (!saw_header) {
      constexpr std::string_view kHeader = "alphabet:";
      if (line.substr(0, kHeader.size()) != kHeader) {
        throw ParseError("cost table must start with 'alphabet:'",
                         line_offset);
      }
      alphabet = SplitCommas(line.substr(kHeader.size()));
      saw_header = true;
      continue;
    }
    auto fields = SplitCommas(line);
    if (fields.size() != 3) {
      throw ParseError("expected 'x,y,cost'", line_offset);
    }
    auto cost = Rational::Parse(fields[2]);
    if (!cost) throw ParseError("bad cost '" + fields[2] + "'", line_offset);
    entries.emplace_back(fields[0], fields[1], *cost);
  }
  if (!saw_header) throw ParseError("missing 'alphabet:' header", 0);
  return RelabelTable(std::move(alphabet), entries);
}

RelabelTable RelabelTable::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Io", "cannot open cost table '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

int RelabelTable::IndexOf(std::string_view symbol) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == symbol) return static_cast<int>(i);
  }
  return -1;
}

Rational RelabelTable::Get(std::string_view x, std::string_view y) const {
  const int i = IndexOf(x);
  if (i < 0) throw UnknownSymbolError(std::string(x));
  const int j = IndexOf(y);
  if (j < 0) throw UnknownSymbolError(std::string(y));
  return cost_[i][j];
}

CostModel::CostModel(std::optional<RelabelTable> table, Rational gap_open,
                     Rational gap_extend)
    : table_(std::move(table)), gap_open_(gap_open), gap_extend_(gap_extend) {
  if (gap_open_ < Rational(0)) {
    throw CostModelError("InvalidGapCost", "gap open cost must be >= 0, got " +
                                               gap_open_.ToString());
  }
  if (gap_extend_ <= Rational(0)) {
    throw CostModelError("InvalidGapCost",
                         "gap extend cost must be > 0, got " +
                             gap_extend_.ToString());
  }
  RecomputeDenominator();
}

CostModel CostModel::Unit(Rational gap_open, Rational gap_extend) {
  return CostModel(std::nullopt, gap_open, gap_extend);
}

CostModel CostModel::FromTable(RelabelTable table, Rational gap_open,
                               Rational gap_extend) {
  return CostModel(std::move(table), gap_open, gap_extend);
}

CostModel CostModel::WithIndelCost(Rational indel) const {
  if (indel <= Rational(0)) {
    throw CostModelError("InvalidIndelCost", "indel cost must be positive");
  }
  CostModel out = *this;
  out.indel_override_ = indel;
  out.RecomputeDenominator();
  return out;
}

void CostModel::RecomputeDenominator() {
  std::int64_t den = Lcm(gap_open_.den(), gap_extend_.den());
  if (indel_override_) den = Lcm(den, indel_override_->den());
  if (table_) {
    for (const auto& x : table_->alphabet()) {
      for (const auto& y : table_->alphabet()) {
        den = Lcm(den, table_->Get(x, y).den());
      }
    }
  }
  denominator_ = den;
}

Cost CostModel::GapCost(std::int64_t k) const {
  if (k <= 0) return Cost(0);
  return GapOpen() + k * GapExtend();
}

Cost CostModel::RelabelCost(std::string_view x, std::string_view y) const {
  const bool x_blank = x == kBlank;
  const bool y_blank = y == kBlank;
  if (x_blank && y_blank) return Cost(0);
  if (x_blank || y_blank) {
    if (indel_override_) return ToCost(*indel_override_);
    if (table_ && table_->has_blank()) return ToCost(table_->Get(x, y));
    if (table_) {
      // Still reject symbols the table does not know.
      table_->Get(x_blank ? y : x, x_blank ? y : x);
    }
    return Cost(denominator_);
  }
  if (table_) return ToCost(table_->Get(x, y));
  return Cost(x == y ? 0 : denominator_);
}

Cost CostModel::ToCost(const Rational& value) const {
  // value.den() divides denominator_ by construction for model parameters.
  const Rational scaled = value * Rational(denominator_);
  if (scaled.den() != 1) {
    throw CostModelError("Denominator", "value " + value.ToString() +
                                            " is not representable in ticks "
                                            "of 1/" +
                                            std::to_string(denominator_));
  }
  return Cost(scaled.num());
}

Rational CostModel::ToRational(Cost cost) const {
  return Rational(cost.ticks(), denominator_);
}

std::string CostModel::Format(Cost cost) const {
  if (cost.is_infinite()) return "inf";
  return ToRational(cost).ToString();
}

}  // namespace treedist
