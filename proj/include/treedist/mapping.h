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

#ifndef TREEDIST_MAPPING_H_
#define TREEDIST_MAPPING_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treedist/cost.h"
#include "treedist/tree.h"

namespace treedist {

enum class MappingModel { kClassic, kGeneralGap, kSubtreeGap };

// "classic", "general", "subtree".
std::string_view ModelName(MappingModel model);
std::optional<MappingModel> ParseModelName(std::string_view name);

// Matched node pairs (t1 node, t2 node), kept sorted by the t1 node.
struct EditMapping {
  std::vector<std::pair<NodeId, NodeId>> pairs;

  void Normalize();
  friend bool operator==(const EditMapping&, const EditMapping&) = default;
};

// One-to-one, sibling order and ancestor order, checked pair by pair.
// On failure `why` (if given) receives a short explanation.
bool IsValidMapping(const LabeledTree& t1, const LabeledTree& t2,
                    const EditMapping& mapping, std::string* why = nullptr);

// matched[v] for every node of `tree` on the given side (0 for t1, 1 for t2).
std::vector<bool> MatchedFlags(const LabeledTree& tree,
                               const EditMapping& mapping, int side);

// True iff the unmatched nodes form a disjoint union of complete subtrees.
bool UnmatchedAreCompleteSubtrees(const LabeledTree& tree,
                                  const std::vector<bool>& matched);

// Maximal edge-connected sets of unmatched nodes, each listed in preorder
// starting at its topmost node. Under the complete-subtree constraint every
// component is a full subtree, so the same routine serves both gap models.
std::vector<std::vector<NodeId>> GapComponents(
    const LabeledTree& tree, const std::vector<bool>& matched);

// Cost of `mapping` under `which`. Classic: relabels plus per-node blank
// costs. Gap models: relabels plus a + b|g| per gap g in either tree.
// nullopt when the mapping is infeasible for the subtree-gap model.
std::optional<Cost> PriceMapping(const LabeledTree& t1, const LabeledTree& t2,
                                 const EditMapping& mapping,
                                 const CostModel& model, MappingModel which);

// "1:a->1:a 3:c->2:c" using 1-based preorder ordinals.
std::string FormatMapping(const LabeledTree& t1, const LabeledTree& t2,
                          const EditMapping& mapping);

}  // namespace treedist

#endif  // TREEDIST_MAPPING_H_
