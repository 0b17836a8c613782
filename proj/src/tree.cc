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

#include "treedist/tree.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "treedist/errors.h"

namespace treedist {
namespace {

bool IsLabelChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  LabeledTree Run() {
    SkipSpace();
    if (pos_ == text_.size()) throw ParseError("empty tree", pos_);
    const NodeId root = builder_.AddRoot(ReadLabel());
    ParseChildren(root);
    SkipSpace();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return std::move(builder_).Build();
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  std::string ReadLabel() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsLabelChar(text_[pos_])) ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size()) throw ParseError("expected label", pos_);
      throw ParseError(
          std::string("expected label, found '") + text_[pos_] + "'", pos_);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // Iterative so deep spines cannot blow the stack.
  void ParseChildren(NodeId root) {
    std::vector<NodeId> open;
    NodeId last = root;
    while (true) {
      SkipSpace();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        open.push_back(last);
        last = builder_.AddChild(open.back(), ReadLabel());
        continue;
      }
      if (open.empty()) return;
      SkipSpace();
      if (pos_ == text_.size()) throw ParseError("unclosed '('", pos_);
      if (text_[pos_] == ',') {
        ++pos_;
        last = builder_.AddChild(open.back(), ReadLabel());
      } else if (text_[pos_] == ')') {
        ++pos_;
        open.pop_back();
        if (open.empty()) return;
      } else {
        throw ParseError(
            std::string("expected ',' or ')', found '") + text_[pos_] + "'",
            pos_);
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  LabeledTree::Builder builder_;
};

}  // namespace

NodeId LabeledTree::Builder::AddRoot(std::string label) {
  if (has_root_) throw std::logic_error("tree already has a root");
  if (label.empty() || label == "-") {
    throw std::invalid_argument("invalid node label '" + label + "'");
  }
  has_root_ = true;
  // AddChild needs a root, so the root is always id 0.
  labels_.push_back(std::move(label));
  children_.emplace_back();
  return 0;
}

NodeId LabeledTree::Builder::AddChild(NodeId parent, std::string label) {
  if (!has_root_ || parent < 0 ||
      parent >= static_cast<NodeId>(labels_.size())) {
    throw std::out_of_range("AddChild: unknown parent");
  }
  if (label.empty() || label == "-") {
    throw std::invalid_argument("invalid node label '" + label + "'");
  }
  const NodeId id = static_cast<NodeId>(labels_.size());
  labels_.push_back(std::move(label));
  children_.emplace_back();
  children_[parent].push_back(id);
  return id;
}

LabeledTree LabeledTree::Builder::Build() && {
  if (!has_root_) throw std::logic_error("tree has no root");
  const int n = static_cast<int>(labels_.size());
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<NodeId> stack = {0};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  assert(static_cast<int>(order.size()) == n);
  std::vector<NodeId> new_id(n);
  for (int k = 0; k < n; ++k) new_id[order[k]] = k;

  LabeledTree tree;
  tree.labels_.resize(n);
  tree.children_.resize(n);
  for (int k = 0; k < n; ++k) {
    const NodeId old = order[k];
    tree.labels_[k] = std::move(labels_[old]);
    for (NodeId c : children_[old]) tree.children_[k].push_back(new_id[c]);
  }
  tree.FinishIndexing();
  return tree;
}

void LabeledTree::FinishIndexing() {
  const int n = size();
  parent_.assign(n, kNoNode);
  last_.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId c : children_[v]) parent_[c] = v;
  }
  for (NodeId v = n - 1; v >= 0; --v) {
    last_[v] = children_[v].empty() ? v : last_[children_[v].back()];
  }
}

LabeledTree LabeledTree::Parse(std::string_view text) {
  return BracketParser(text).Run();
}

std::string LabeledTree::ToBracket() const {
  std::string out;
  // (node, next child index)
  std::vector<std::pair<NodeId, std::size_t>> stack = {{0, 0}};
  out += labels_[0];
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& kids = children_[v];
    if (next == kids.size()) {
      if (!kids.empty()) out += ')';
      stack.pop_back();
      continue;
    }
    out += next == 0 ? '(' : ',';
    const NodeId c = kids[next++];
    out += labels_[c];
    stack.push_back({c, 0});
  }
  return out;
}

int LabeledTree::LeafCount() const {
  return static_cast<int>(std::count_if(
      children_.begin(), children_.end(),
      [](const auto& kids) { return kids.empty(); }));
}

int LabeledTree::Depth() const {
  std::vector<int> depth(size(), 1);
  int best = 1;
  for (NodeId v = 1; v < size(); ++v) {
    depth[v] = depth[parent_[v]] + 1;
    best = std::max(best, depth[v]);
  }
  return best;
}

int LabeledTree::MaxArity() const {
  std::size_t best = 0;
  for (const auto& kids : children_) best = std::max(best, kids.size());
  return static_cast<int>(best);
}

NodeId LabeledTree::FindNodeWithArityAbove(int arity) const {
  for (NodeId v = 0; v < size(); ++v) {
    if (static_cast<int>(children_[v].size()) > arity) return v;
  }
  return kNoNode;
}

LabeledTree LabeledTree::Subtree(NodeId v) const {
  LabeledTree out;
  const NodeId end = last_[v] + 1;
  out.labels_.assign(labels_.begin() + v, labels_.begin() + end);
  out.children_.resize(end - v);
  for (NodeId u = v; u < end; ++u) {
    for (NodeId c : children_[u]) out.children_[u - v].push_back(c - v);
  }
  out.FinishIndexing();
  return out;
}

LabeledTree LabeledTree::WithLabels(
    const std::vector<std::string>& labels) const {
  if (static_cast<int>(labels.size()) != size()) {
    throw std::invalid_argument("WithLabels: label count mismatch");
  }
  for (const auto& l : labels) {
    if (l.empty() || l == "-") {
      throw std::invalid_argument("invalid node label '" + l + "'");
    }
  }
  LabeledTree out = *this;
  out.labels_ = labels;
  return out;
}

}  // namespace treedist
