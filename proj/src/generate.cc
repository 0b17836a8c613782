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

#include "treedist/generate.h"

#include <map>
#include <stdexcept>
#include <utility>

namespace treedist {
namespace {

// A shape as nested child lists, built bottom-up.
struct Shape {
  std::vector<Shape> kids;
};

// Forests of exactly `size` nodes and at most `max_roots` roots (0 = any).
void Forests(int size, int max_roots, int max_arity,
             const std::vector<std::vector<Shape>>& trees,
             std::vector<std::vector<Shape>>* out) {
  if (size == 0) {
    out->push_back({});
    return;
  }
  if (max_roots == 0 && max_arity > 0) return;
  const int next_roots = max_arity > 0 ? max_roots - 1 : 0;
  for (int first = 1; first <= size; ++first) {
    std::vector<std::vector<Shape>> rests;
    Forests(size - first, next_roots, max_arity, trees, &rests);
    for (const Shape& t : trees[first]) {
      for (const auto& rest : rests) {
        std::vector<Shape> forest = {t};
        forest.insert(forest.end(), rest.begin(), rest.end());
        out->push_back(std::move(forest));
      }
    }
  }
}

// trees[k] = all shapes with k nodes.
std::vector<std::vector<Shape>> TreesBySize(int n, int max_arity) {
  std::vector<std::vector<Shape>> trees(n + 1);
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Shape>> forests;
    Forests(k - 1, max_arity, max_arity, trees, &forests);
    for (auto& f : forests) trees[k].push_back(Shape{std::move(f)});
  }
  return trees;
}

void AddShape(const Shape& s, NodeId parent, LabeledTree::Builder* b) {
  for (const Shape& k : s.kids) AddShape(k, b->AddChild(parent, "x"), b);
}

LabeledTree ToTree(const Shape& s) {
  LabeledTree::Builder b;
  AddShape(s, b.AddRoot("x"), &b);
  return std::move(b).Build();
}

}  // namespace

std::vector<LabeledTree> ShapesOfSize(int n, int max_arity) {
  if (n < 1) return {};
  const auto trees = TreesBySize(n, max_arity);
  std::vector<LabeledTree> out;
  out.reserve(trees[n].size());
  for (const Shape& s : trees[n]) out.push_back(ToTree(s));
  return out;
}

std::vector<LabeledTree> ShapesUpTo(int max_size, int max_arity) {
  std::vector<LabeledTree> out;
  if (max_size < 1) return out;
  const auto trees = TreesBySize(max_size, max_arity);
  for (int k = 1; k <= max_size; ++k) {
    for (const Shape& s : trees[k]) out.push_back(ToTree(s));
  }
  return out;
}

std::vector<LabeledTree> AllLabelings(
    const LabeledTree& shape, const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  const int n = shape.size();
  std::vector<int> digits(n, 0);
  std::vector<LabeledTree> out;
  while (true) {
    std::vector<std::string> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = alphabet[digits[k]];
    out.push_back(shape.WithLabels(labels));
    int k = n - 1;
    while (k >= 0 && digits[k] + 1 == static_cast<int>(alphabet.size())) {
      digits[k--] = 0;
    }
    if (k < 0) break;
    ++digits[k];
  }
  return out;
}

std::vector<LabeledTree> LabeledTreesUpTo(
    int max_size, const std::vector<std::string>& alphabet, int max_arity) {
  std::vector<LabeledTree> out;
  for (const auto& shape : ShapesUpTo(max_size, max_arity)) {
    for (auto& t : AllLabelings(shape, alphabet)) out.push_back(std::move(t));
  }
  return out;
}

LabeledTree RandomTree(std::mt19937_64& rng, int n,
                       const std::vector<std::string>& alphabet,
                       int max_arity) {
  if (n < 1) throw std::invalid_argument("RandomTree: n must be positive");
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  std::uniform_int_distribution<std::size_t> pick_label(0,
                                                        alphabet.size() - 1);
  LabeledTree::Builder b;
  std::vector<NodeId> open = {b.AddRoot(alphabet[pick_label(rng)])};
  std::map<NodeId, int> arity;
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t slot = pick(rng);
    const NodeId parent = open[slot];
    const NodeId child = b.AddChild(parent, alphabet[pick_label(rng)]);
    if (max_arity > 0 && ++arity[parent] == max_arity) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(child);
  }
  return std::move(b).Build();
}

LabeledTree PathTree(int n, const std::string& label) {
  LabeledTree::Builder b;
  NodeId v = b.AddRoot(label);
  for (int k = 1; k < n; ++k) v = b.AddChild(v, label);
  return std::move(b).Build();
}

LabeledTree CompleteBinaryTree(int levels, const std::string& label) {
  LabeledTree::Builder b;
  std::vector<NodeId> frontier = {b.AddRoot(label)};
  for (int level = 1; level < levels; ++level) {
    std::vector<NodeId> next;
    for (NodeId v : frontier) {
      next.push_back(b.AddChild(v, label));
      next.push_back(b.AddChild(v, label));
    }
    frontier = std::move(next);
  }
  return std::move(b).Build();
}

}  // namespace treedist
