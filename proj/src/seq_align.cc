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
#include <stdexcept>

#include "treedist/errors.h"

namespace treedist {
namespace {

enum class Which { kMatch, kGapRight, kGapLeft };

void RejectBlank(std::string_view s) {
  if (s.find('-') != std::string_view::npos) {
    throw Error("BadSequence", "'-' is reserved for the blank symbol");
  }
}

}  // namespace

Alignment Align(std::string_view s1, std::string_view s2,
                const CostModel& model) {
  RejectBlank(s1);
  RejectBlank(s2);
  const int m = static_cast<int>(s1.size());
  const int n = static_cast<int>(s2.size());
  const Cost inf = Cost::Infinity();
  const Cost open = model.GapOpen();
  const Cost ext = model.GapExtend();

  Matrix<Cost> rel(m + 1, n + 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      rel(i, j) = model.RelabelCost(std::string(1, s1[i - 1]),
                                    std::string(1, s2[j - 1]));
    }
  }

  Alignment out;
  auto& mm = out.tables.match;
  auto& gl = out.tables.gap_left;
  auto& gr = out.tables.gap_right;
  mm.Reset(m + 1, n + 1, inf);
  gl.Reset(m + 1, n + 1, inf);
  gr.Reset(m + 1, n + 1, inf);
  mm(0, 0) = Cost(0);
  for (int j = 1; j <= n; ++j) gl(0, j) = open + static_cast<std::int64_t>(j) * ext;
  for (int i = 1; i <= m; ++i) gr(i, 0) = open + static_cast<std::int64_t>(i) * ext;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      mm(i, j) = rel(i, j) +
                 std::min({mm(i - 1, j - 1), gl(i - 1, j - 1), gr(i - 1, j - 1)});
      gl(i, j) = std::min({mm(i, j - 1) + open + ext, gl(i, j - 1) + ext,
                           gr(i, j - 1) + open + ext});
      gr(i, j) = std::min({mm(i - 1, j) + open + ext, gr(i - 1, j) + ext,
                           gl(i - 1, j) + open + ext});
    }
  }
  out.distance = std::min({mm(m, n), gl(m, n), gr(m, n)});

  // Traceback.
  auto pick = [&](int i, int j, Cost target) {
    if (mm(i, j) == target) return Which::kMatch;
    if (gr(i, j) == target) return Which::kGapRight;
    return Which::kGapLeft;
  };
  int i = m;
  int j = n;
  Which state = pick(i, j, out.distance);
  std::vector<AlignColumn> rev;
  while (i > 0 || j > 0) {
    const std::string blank(kBlank);
    switch (state) {
      case Which::kMatch: {
        rev.emplace_back(std::string(1, s1[i - 1]), std::string(1, s2[j - 1]));
        const Cost prev(mm(i, j).ticks() - rel(i, j).ticks());
        --i;
        --j;
        state = pick(i, j, prev);
        break;
      }
      case Which::kGapRight: {
        rev.emplace_back(std::string(1, s1[i - 1]), blank);
        const Cost here = gr(i, j);
        --i;
        if (here == mm(i, j) + open + ext) {
          state = Which::kMatch;
        } else if (here == gr(i, j) + ext) {
          state = Which::kGapRight;
        } else {
          state = Which::kGapLeft;
        }
        break;
      }
      case Which::kGapLeft: {
        rev.emplace_back(blank, std::string(1, s2[j - 1]));
        const Cost here = gl(i, j);
        --j;
        if (here == mm(i, j) + open + ext) {
          state = Which::kMatch;
        } else if (here == gr(i, j) + open + ext) {
          state = Which::kGapRight;
        } else {
          state = Which::kGapLeft;
        }
        break;
      }
    }
  }
  out.columns.assign(rev.rbegin(), rev.rend());
  return out;
}

Cost PriceAlignment(const std::vector<AlignColumn>& columns,
                    const CostModel& model) {
  Cost total;
  std::int64_t run1 = 0;
  std::int64_t run2 = 0;
  for (const auto& [x, y] : columns) {
    const bool bx = x == kBlank;
    const bool by = y == kBlank;
    if (bx && by) throw std::invalid_argument("column with two blanks");
    if (bx) {
      ++run1;
    } else {
      total += model.GapCost(run1);
      run1 = 0;
    }
    if (by) {
      ++run2;
    } else {
      total += model.GapCost(run2);
      run2 = 0;
    }
    if (!bx && !by) total += model.RelabelCost(x, y);
  }
  total += model.GapCost(run1);
  total += model.GapCost(run2);
  return total;
}

Cost BruteForceAlignmentCost(std::string_view s1, std::string_view s2,
                             const CostModel& model) {
  RejectBlank(s1);
  RejectBlank(s2);
  std::vector<AlignColumn> columns;
  Cost best = Cost::Infinity();
  const std::string blank(kBlank);
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == s1.size() && j == s2.size()) {
      best = std::min(best, PriceAlignment(columns, model));
      return;
    }
    if (i < s1.size() && j < s2.size()) {
      columns.emplace_back(std::string(1, s1[i]), std::string(1, s2[j]));
      self(self, i + 1, j + 1);
      columns.pop_back();
    }
    if (i < s1.size()) {
      columns.emplace_back(std::string(1, s1[i]), blank);
      self(self, i + 1, j);
      columns.pop_back();
    }
    if (j < s2.size()) {
      columns.emplace_back(blank, std::string(1, s2[j]));
      self(self, i, j + 1);
      columns.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

std::pair<std::string, std::string> AlignmentRows(
    const std::vector<AlignColumn>& columns) {
  std::pair<std::string, std::string> rows;
  for (const auto& [x, y] : columns) {
    rows.first += x;
    rows.second += y;
  }
  return rows;
}

}  // namespace treedist
