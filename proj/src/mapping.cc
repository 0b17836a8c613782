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

#include "treedist/mapping.h"

#include <algorithm>

namespace treedist {
namespace {

// u strictly left of v: neither is an ancestor of the other and u comes
// first in preorder.
bool LeftOf(const LabeledTree& t, NodeId u, NodeId v) {
  return u < v && !t.IsAncestor(u, v);
}

}  // namespace

std::string_view ModelName(MappingModel model) {
  switch (model) {
    case MappingModel::kClassic:
      return "classic";
    case MappingModel::kGeneralGap:
      return "general";
    case MappingModel::kSubtreeGap:
      return "subtree";
  }
  return "?";
}

std::optional<MappingModel> ParseModelName(std::string_view name) {
  if (name == "classic") return MappingModel::kClassic;
  if (name == "general") return MappingModel::kGeneralGap;
  if (name == "subtree") return MappingModel::kSubtreeGap;
  return std::nullopt;
}

void EditMapping::Normalize() { std::sort(pairs.begin(), pairs.end()); }

bool IsValidMapping(const LabeledTree& t1, const LabeledTree& t2,
                    const EditMapping& mapping, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const auto& p = mapping.pairs;
  for (const auto& [u, v] : p) {
    if (u < 0 || u >= t1.size() || v < 0 || v >= t2.size()) {
      return fail("node out of range");
    }
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      const auto [u1, v1] = p[x];
      const auto [u2, v2] = p[y];
      if (u1 == u2 || v1 == v2) return fail("not one-to-one");
      if (t1.IsAncestor(u1, u2) != t2.IsAncestor(v1, v2) ||
          t1.IsAncestor(u2, u1) != t2.IsAncestor(v2, v1)) {
        return fail("ancestor order violated");
      }
      if (LeftOf(t1, u1, u2) != LeftOf(t2, v1, v2) ||
          LeftOf(t1, u2, u1) != LeftOf(t2, v2, v1)) {
        return fail("sibling order violated");
      }
    }
  }
  return true;
}

std::vector<bool> MatchedFlags(const LabeledTree& tree,
                               const EditMapping& mapping, int side) {
  std::vector<bool> matched(tree.size(), false);
  for (const auto& pr : mapping.pairs) {
    matched[side == 0 ? pr.first : pr.second] = true;
  }
  return matched;
}

bool UnmatchedAreCompleteSubtrees(const LabeledTree& tree,
                                  const std::vector<bool>& matched) {
  for (NodeId v = 1; v < tree.size(); ++v) {
    if (matched[v] && !matched[tree.parent(v)]) return false;
  }
  return true;
}

std::vector<std::vector<NodeId>> GapComponents(
    const LabeledTree& tree, const std::vector<bool>& matched) {
  std::vector<std::vector<NodeId>> gaps;
  std::vector<int> component(tree.size(), -1);
  for (NodeId v = 0; v < tree.size(); ++v) {
    if (matched[v]) continue;
    const NodeId p = tree.parent(v);
    if (p == kNoNode || matched[p]) {
      component[v] = static_cast<int>(gaps.size());
      gaps.push_back({v});
    } else {
      component[v] = component[p];
      gaps[component[v]].push_back(v);
    }
  }
  return gaps;
}

std::optional<Cost> PriceMapping(const LabeledTree& t1, const LabeledTree& t2,
                                 const EditMapping& mapping,
                                 const CostModel& model, MappingModel which) {
  Cost total;
  for (const auto& [u, v] : mapping.pairs) {
    total += model.RelabelCost(t1.label(u), t2.label(v));
  }
  const auto matched1 = MatchedFlags(t1, mapping, 0);
  const auto matched2 = MatchedFlags(t2, mapping, 1);
  if (which == MappingModel::kClassic) {
    for (NodeId u = 0; u < t1.size(); ++u) {
      if (!matched1[u]) total += model.DeleteCost(t1.label(u));
    }
    for (NodeId v = 0; v < t2.size(); ++v) {
      if (!matched2[v]) total += model.InsertCost(t2.label(v));
    }
    return total;
  }
  if (which == MappingModel::kSubtreeGap &&
      (!UnmatchedAreCompleteSubtrees(t1, matched1) ||
       !UnmatchedAreCompleteSubtrees(t2, matched2))) {
    return std::nullopt;
  }
  for (const auto& g : GapComponents(t1, matched1)) {
    total += model.GapCost(static_cast<std::int64_t>(g.size()));
  }
  for (const auto& g : GapComponents(t2, matched2)) {
    total += model.GapCost(static_cast<std::int64_t>(g.size()));
  }
  return total;
}

std::string FormatMapping(const LabeledTree& t1, const LabeledTree& t2,
                          const EditMapping& mapping) {
  std::string out;
  for (const auto& [u, v] : mapping.pairs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u + 1) + ":" + t1.label(u) + "->" +
           std::to_string(v + 1) + ":" + t2.label(v);
  }
  return out;
}

}  // namespace treedist
