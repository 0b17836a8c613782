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

#ifndef TREEDIST_GENERATE_H_
#define TREEDIST_GENERATE_H_

#include <random>
#include <string>
#include <vector>

#include "treedist/tree.h"

namespace treedist {

// Every ordered tree shape with exactly n nodes (labels all "x"). With
// max_arity > 0, nodes have at most that many children.
std::vector<LabeledTree> ShapesOfSize(int n, int max_arity = 0);
// Shapes of sizes 1..max_size, smaller first.
std::vector<LabeledTree> ShapesUpTo(int max_size, int max_arity = 0);

// All |alphabet|^size labelings of `shape`, in lexicographic order of the
// preorder label sequence.
std::vector<LabeledTree> AllLabelings(const LabeledTree& shape,
                                      const std::vector<std::string>& alphabet);

// Every labeled tree with 1..max_size nodes over `alphabet`.
std::vector<LabeledTree> LabeledTreesUpTo(
    int max_size, const std::vector<std::string>& alphabet,
    int max_arity = 0);

// Random tree with n nodes: node k attaches as the last child of a
// uniformly chosen earlier node that still has room.
LabeledTree RandomTree(std::mt19937_64& rng, int n,
                       const std::vector<std::string>& alphabet,
                       int max_arity = 0);

// Left spine: each node has exactly one child, n nodes.
LabeledTree PathTree(int n, const std::string& label = "x");
// Complete binary tree with the given number of levels.
LabeledTree CompleteBinaryTree(int levels, const std::string& label = "x");

}  // namespace treedist

#endif  // TREEDIST_GENERATE_H_
