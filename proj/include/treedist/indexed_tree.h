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

#ifndef TREEDIST_INDEXED_TREE_H_
#define TREEDIST_INDEXED_TREE_H_

#include <string>
#include <vector>

#include "treedist/tree.h"

namespace treedist {

enum class Traversal { kPostorder, kPreorder };

// Traversal-order view of a LabeledTree. Ordinals run 1..size(); ordinal 0
// stands for "no node" / the empty forest.
//
// l() is the leftmost-leaf ordinal and is only filled for postorder;
// r() is the rightmost-leaf ordinal and is only filled for preorder.
// key_roots() and cdepth() are postorder-only. Accessing a field the
// traversal does not provide throws std::out_of_range.
class IndexedTree {
 public:
  static IndexedTree Index(const LabeledTree& tree, Traversal order);

  Traversal order() const { return order_; }
  int size() const { return size_; }

  int ordinal_of(NodeId v) const { return ordinal_of_[v]; }
  NodeId node_at(int ordinal) const { return node_at_[ordinal]; }
  const std::string& label(int ordinal) const { return labels_[ordinal]; }

  // 0 for the root.
  int parent(int ordinal) const { return parent_[ordinal]; }
  int subtree_size(int ordinal) const { return subtree_size_[ordinal]; }
  bool is_leaf(int ordinal) const { return subtree_size_[ordinal] == 1; }

  int l(int ordinal) const { return l_.at(ordinal); }
  int r(int ordinal) const { return r_.at(ordinal); }
  // Ascending.
  const std::vector<int>& key_roots() const;
  int cdepth(int ordinal) const { return cdepth_.at(ordinal); }

 private:
  IndexedTree() = default;

  Traversal order_ = Traversal::kPostorder;
  int size_ = 0;
  std::vector<int> ordinal_of_;
  std::vector<NodeId> node_at_;
  std::vector<std::string> labels_;
  std::vector<int> parent_;
  std::vector<int> subtree_size_;
  std::vector<int> l_;
  std::vector<int> r_;
  std::vector<int> key_roots_;
  std::vector<int> cdepth_;
};

struct CdepthAudit {
  long long sum_sizes = 0;   // over key roots of subtree size
  long long sum_cdepth = 0;  // over all nodes of cdepth
  int max_cdepth = 0;
};

CdepthAudit AuditCdepth(const LabeledTree& tree);

}  // namespace treedist

#endif  // TREEDIST_INDEXED_TREE_H_
