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

#ifndef TREEDIST_ORACLE_H_
#define TREEDIST_ORACLE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "treedist/cost.h"
#include "treedist/mapping.h"
#include "treedist/tree.h"

namespace treedist {

inline constexpr int kDefaultOracleCap = 10;

// kDefaultOracleCap unless TREEDIST_MAX_ORACLE holds a positive integer.
int OracleSizeCap();

// Calls `visit` once for every valid mapping between t1 and t2 (every
// subset of V1 x V2 meeting the one-to-one, sibling-order and
// ancestor-order conditions). Extends pairs over t1 in preorder and prunes
// as soon as a new pair conflicts with an earlier one. Throws SizeCapError
// when either tree exceeds OracleSizeCap().
void EnumerateMappings(const LabeledTree& t1, const LabeledTree& t2,
                       const std::function<void(const EditMapping&)>& visit);

struct OracleResult {
  Cost distance = Cost::Infinity();
  EditMapping mapping;          // first optimal mapping in enumeration order
  long long mappings = 0;       // valid mappings enumerated
  long long feasible = 0;       // of those, priced under `which`
};

OracleResult OracleDistance(const LabeledTree& t1, const LabeledTree& t2,
                            const CostModel& model, MappingModel which);

// Enumerates the mappings of two shapes once, then prices any labeling of
// those shapes without re-enumerating. Used by the exhaustive suites.
class ShapePairOracle {
 public:
  ShapePairOracle(const LabeledTree& shape1, const LabeledTree& shape2);

  long long mapping_count() const {
    return static_cast<long long>(entries_.size());
  }

  // t1 / t2 must have the shapes given at construction.
  Cost Distance(const LabeledTree& t1, const LabeledTree& t2,
                const CostModel& model, MappingModel which) const;

 private:
  struct Entry {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::uint32_t unmatched1 = 0;  // bitmask over t1 nodes
    std::uint32_t unmatched2 = 0;
    int gaps = 0;       // edge-connected unmatched components, both trees
    int unmatched = 0;  // unmatched nodes, both trees
    bool subtree_feasible = false;
  };

  int m_;
  int n_;
  std::vector<Entry> entries_;
};

}  // namespace treedist

#endif  // TREEDIST_ORACLE_H_
