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

#ifndef TREEDIST_TREE_H_
#define TREEDIST_TREE_H_

#include <string>
#include <string_view>
#include <vector>

namespace treedist {

// Node handle inside one LabeledTree. Ids are 0-based preorder positions,
// so the root is always 0 and a subtree occupies a contiguous id range.
using NodeId = int;
inline constexpr NodeId kNoNode = -1;

// Immutable ordered labeled tree.
class LabeledTree {
 public:
  // Collects nodes in any order; Build() renumbers them into preorder.
  class Builder {
   public:
    NodeId AddRoot(std::string label);
    // Appends `label` as the new last child of `parent`.
    NodeId AddChild(NodeId parent, std::string label);
    LabeledTree Build() &&;

   private:
    std::vector<std::string> labels_;
    std::vector<std::vector<NodeId>> children_;
    bool has_root_ = false;
  };

  // Grammar: Tree := Label | Label '(' Tree (',' Tree)* ')', with
  // Label := [A-Za-z0-9_]+ and whitespace allowed between tokens.
  // Throws ParseError carrying the byte offset of the problem.
  static LabeledTree Parse(std::string_view text);

  // Canonical form: no whitespace, parentheses only on internal nodes.
  std::string ToBracket() const;

  int size() const { return static_cast<int>(labels_.size()); }
  NodeId root() const { return 0; }
  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  bool is_leaf(NodeId v) const { return children_[v].empty(); }
  // Last preorder id inside the subtree of v.
  NodeId last_descendant(NodeId v) const { return last_[v]; }
  int subtree_size(NodeId v) const { return last_[v] - v + 1; }
  bool IsAncestor(NodeId u, NodeId v) const {
    return u < v && v <= last_[u];
  }

  int LeafCount() const;
  // Number of nodes on the longest root-to-leaf path (a single node has
  // depth 1).
  int Depth() const;
  int MaxArity() const;
  // First node (in preorder) with more than `arity` children, or kNoNode.
  NodeId FindNodeWithArityAbove(int arity) const;

  // Copy of the subtree rooted at v.
  LabeledTree Subtree(NodeId v) const;
  // Same shape, labels replaced in preorder.
  LabeledTree WithLabels(const std::vector<std::string>& labels) const;

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.labels_ == b.labels_ && a.children_ == b.children_;
  }

 private:
  LabeledTree() = default;
  void FinishIndexing();

  std::vector<std::string> labels_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> last_;
};

}  // namespace treedist

#endif  // TREEDIST_TREE_H_
