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

#ifndef TREEDIST_TED_GAP_H_
#define TREEDIST_TED_GAP_H_

#include <string>

#include "treedist/cost.h"
#include "treedist/mapping.h"
#include "treedist/tree.h"

namespace treedist {

struct GapCounters {
  // Full three-way recurrences evaluated (cells where neither forest is
  // empty); boundary cells are not counted.
  long long cells = 0;
  long long anchor_pairs = 0;  // anchored tables built
};

struct GapResult {
  Cost distance;
  EditMapping mapping;
  GapCounters counters;
};

struct GapOptions {
  bool with_mapping = true;
  // The general-gap recurrence below happens to be sound for any arity,
  // but the public contract is binary trees only. Tests flip this to probe
  // wider trees against the oracle.
  bool require_binary = true;
};

// Affine general-gap distance: every maximal edge-connected set of
// unmatched nodes in either tree is one gap g costing a + b|g|.
//
// Preorder DP over anchored suffix forests. For anchor pair (x, y) and
// rows i in x+1..r(x)+1, columns j in y+1..r(y)+1, the cell holds the best
// cost of mapping nodes i..r(x) against j..r(y) given that x and y are
// matched and every node strictly between x and i on the ancestor path is
// unmatched. Three values per cell:
//   Q_del(i,j) = start1(i) + Q(i+1, j)
//   Q_ins(i,j) = start2(j) + Q(i, j+1)
//   Q(i,j)     = min(Q_del, Q_ins, p(i,j) + T(i,j) + Q(r(i)+1, r(j)+1))
// where start1(i) = a + b when parent(i) == x (gap opens) and b otherwise
// (parent already unmatched, gap continues), and T(i,j) is cell
// (i+1, j+1) of anchor (i, j). A virtual anchor 0 above each root closes
// the recursion.
//
// Throws NotBinaryError unless options.require_binary is false.
GapResult GapDistanceGeneral(const LabeledTree& t1, const LabeledTree& t2,
                             const CostModel& model,
                             const GapOptions& options = {});

// Affine complete-subtree-gap distance on trees of any arity: unmatched
// nodes must form complete subtrees, each priced a + b|subtree|. Same DP,
// but a deletion removes the whole subtree of i and jumps to r(i)+1, so
// only child boundaries of the anchors are ever addressed.
GapResult GapDistanceSubtree(const LabeledTree& t1, const LabeledTree& t2,
                             const CostModel& model, bool with_mapping = true);

// cells <= 4 * (7 + m + n) * m^2 * n^2.
bool VerifyGeneralGapComplexity(int m, int n, const GapCounters& counters,
                                std::string* why = nullptr);
// cells <= 4 * m^2 * n^2.
bool VerifySubtreeGapComplexity(int m, int n, const GapCounters& counters,
                                std::string* why = nullptr);

}  // namespace treedist

#endif  // TREEDIST_TED_GAP_H_
