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

#ifndef TREEDIST_TED_CLASSIC_H_
#define TREEDIST_TED_CLASSIC_H_

#include <string>

#include "treedist/cost.h"
#include "treedist/mapping.h"
#include "treedist/matrix.h"
#include "treedist/tree.h"

namespace treedist {

struct ClassicCounters {
  long long forest_cells = 0;  // forestdist cells written, padding included
  long long tree_pairs = 0;    // key-root pairs processed
};

struct ClassicResult {
  Cost distance;
  EditMapping mapping;
  ClassicCounters counters;
  // treedist(i, j) over postorder ordinals; row and column 0 unused.
  Matrix<Cost> treedist;
};

// Zhang-Shasha. Key roots are visited in increasing postorder so every
// treedist value consumed has already been produced. The mapping is
// recovered by backtrace with tie order match > delete > insert.
ClassicResult TreeDistance(const LabeledTree& t1, const LabeledTree& t2,
                           const CostModel& model, bool with_mapping = true);

// forest_cells <= 4 * m * n * min(depth1, leaves1) * min(depth2, leaves2)
// and tree_pairs == |key_roots1| * |key_roots2|.
bool VerifyClassicComplexity(const LabeledTree& t1, const LabeledTree& t2,
                             const ClassicCounters& counters,
                             std::string* why = nullptr);

}  // namespace treedist

#endif  // TREEDIST_TED_CLASSIC_H_
