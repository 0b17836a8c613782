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

#include "treedist/indexed_tree.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace treedist {
namespace {

// Postorder sequence of node ids.
std::vector<NodeId> PostorderNodes(const LabeledTree& tree) {
  std::vector<NodeId> out;
  out.reserve(tree.size());
  std::vector<std::pair<NodeId, std::size_t>> stack = {{tree.root(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == tree.children(v).size()) {
      out.push_back(v);
      stack.pop_back();
      continue;
    }
    const NodeId c = tree.children(v)[next++];
    stack.push_back({c, 0});
  }
  return out;
}

bool HasLeftSibling(const LabeledTree& tree, NodeId v) {
  const NodeId p = tree.parent(v);
  return p != kNoNode && tree.children(p).front() != v;
}

}  // namespace

IndexedTree IndexedTree::Index(const LabeledTree& tree, Traversal order) {
  IndexedTree out;
  const int n = tree.size();
  out.order_ = order;
  out.size_ = n;
  out.ordinal_of_.assign(n, 0);
  out.node_at_.assign(n + 1, kNoNode);
  if (order == Traversal::kPreorder) {
    for (NodeId v = 0; v < n; ++v) out.node_at_[v + 1] = v;
  } else {
    const auto post = PostorderNodes(tree);
    for (int k = 0; k < n; ++k) out.node_at_[k + 1] = post[k];
  }
  for (int k = 1; k <= n; ++k) out.ordinal_of_[out.node_at_[k]] = k;

  out.labels_.assign(n + 1, std::string());
  out.parent_.assign(n + 1, 0);
  out.subtree_size_.assign(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    const NodeId v = out.node_at_[k];
    out.labels_[k] = tree.label(v);
    const NodeId p = tree.parent(v);
    out.parent_[k] = p == kNoNode ? 0 : out.ordinal_of_[p];
    out.subtree_size_[k] = tree.subtree_size(v);
  }

  if (order == Traversal::kPreorder) {
    out.r_.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
      out.r_[k] = out.ordinal_of_[tree.last_descendant(out.node_at_[k])];
    }
    return out;
  }

  // Postorder: a subtree occupies l(k)..k.
  out.l_.assign(n + 1, 0);
  for (int k = 1; k <= n; ++k) out.l_[k] = k - out.subtree_size_[k] + 1;

  for (int k = 1; k <= n; ++k) {
    const NodeId v = out.node_at_[k];
    if (v == tree.root() || HasLeftSibling(tree, v)) {
      out.key_roots_.push_back(k);
    }
  }
  // Preorder walk so parents are settled before children.
  std::vector<int> cdepth_by_node(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const bool key = v == tree.root() || HasLeftSibling(tree, v);
    const int above = v == tree.root() ? 0 : cdepth_by_node[tree.parent(v)];
    cdepth_by_node[v] = above + (key ? 1 : 0);
  }
  out.cdepth_.assign(n + 1, 0);
  for (int k = 1; k <= n; ++k) out.cdepth_[k] = cdepth_by_node[out.node_at_[k]];
  return out;
}

const std::vector<int>& IndexedTree::key_roots() const {
  if (order_ != Traversal::kPostorder) {
    throw std::out_of_range("key roots are defined for postorder only");
  }
  return key_roots_;
}

CdepthAudit AuditCdepth(const LabeledTree& tree) {
  const auto post = IndexedTree::Index(tree, Traversal::kPostorder);
  CdepthAudit audit;
  for (int k : post.key_roots()) audit.sum_sizes += post.subtree_size(k);
  for (int k = 1; k <= post.size(); ++k) {
    audit.sum_cdepth += post.cdepth(k);
    audit.max_cdepth = std::max(audit.max_cdepth, post.cdepth(k));
  }
  return audit;
}

}  // namespace treedist
