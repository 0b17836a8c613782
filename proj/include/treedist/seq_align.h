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

#ifndef TREEDIST_SEQ_ALIGN_H_
#define TREEDIST_SEQ_ALIGN_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treedist/cost.h"
#include "treedist/matrix.h"

namespace treedist {

// Three-matrix affine-gap tables, (m+1) x (n+1).
//   match:     last column pairs s1[i] with s2[j]
//   gap_left:  last column is (blank, s2[j])
//   gap_right: last column is (s1[i], blank)
struct AlignTables {
  Matrix<Cost> match;
  Matrix<Cost> gap_left;
  Matrix<Cost> gap_right;
};

// One alignment column; kBlank for a gap position.
using AlignColumn = std::pair<std::string, std::string>;

struct Alignment {
  Cost distance;
  std::vector<AlignColumn> columns;
  AlignTables tables;
};

// Global alignment with gap cost w(k) = a + b*k per maximal run of blanks in
// either row. Each character of s1 / s2 is one symbol; '-' is reserved for
// the blank and rejected. Traceback prefers match, then a gap in s2, then a
// gap in s1.
Alignment Align(std::string_view s1, std::string_view s2,
                const CostModel& model);

// Relabels plus w(run) for every maximal run of blanks in each row.
Cost PriceAlignment(const std::vector<AlignColumn>& columns,
                    const CostModel& model);

// Minimum of PriceAlignment over every alignment of s1 and s2 (columns
// (x,y), (x,-), (-,y) in any order). Exponential; for checking only.
Cost BruteForceAlignmentCost(std::string_view s1, std::string_view s2,
                             const CostModel& model);

// The two rows, '-' for blanks.
std::pair<std::string, std::string> AlignmentRows(
    const std::vector<AlignColumn>& columns);

}  // namespace treedist

#endif  // TREEDIST_SEQ_ALIGN_H_
