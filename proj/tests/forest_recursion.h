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

// Test-only reference for the classic edit distance: the textbook
// rightmost-root forest recursion, memoized on (forest, forest). Unit
// relabel cost, indel cost `indel`. Independent of the library DP.

#ifndef TREEDIST_TESTS_FOREST_RECURSION_H_
#define TREEDIST_TESTS_FOREST_RECURSION_H_

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "treedist/rational.h"
#include "treedist/tree.h"

namespace treedist::reference {

class ForestRecursion {
 public:
  ForestRecursion(const LabeledTree& t1, const LabeledTree& t2,
                  Rational indel = Rational(1))
      : t1_(t1), t2_(t2), indel_(indel) {}

  Rational Distance() { return D({t1_.root()}, {t2_.root()}); }

 private:
  using Forest = std::vector<NodeId>;

  Rational Size(const LabeledTree& t, const Forest& f) const {
    std::int64_t n = 0;
    for (NodeId v : f) n += t.subtree_size(v);
    return indel_ * Rational(n);
  }

  static Forest DropRightRoot(const LabeledTree& t, Forest f) {
    const NodeId v = f.back();
    f.pop_back();
    for (NodeId c : t.children(v)) f.push_back(c);
    return f;
  }

  Rational D(const Forest& f, const Forest& g) {
    if (f.empty()) return Size(t2_, g);
    if (g.empty()) return Size(t1_, f);
    const auto key = std::make_pair(f, g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const NodeId v = f.back();
    const NodeId w = g.back();
    Rational best = D(DropRightRoot(t1_, f), g) + indel_;
    best = std::min(best, D(f, DropRightRoot(t2_, g)) + indel_);
    Forest f_rest(f.begin(), f.end() - 1);
    Forest g_rest(g.begin(), g.end() - 1);
    Forest fv(t1_.children(v).begin(), t1_.children(v).end());
    Forest gw(t2_.children(w).begin(), t2_.children(w).end());
    const Rational rel(t1_.label(v) == t2_.label(w) ? 0 : 1);
    best = std::min(best, D(f_rest, g_rest) + D(fv, gw) + rel);
    memo_.emplace(key, best);
    return best;
  }

  const LabeledTree& t1_;
  const LabeledTree& t2_;
  Rational indel_;
  std::map<std::pair<Forest, Forest>, Rational> memo_;
};

}  // namespace treedist::reference

#endif  // TREEDIST_TESTS_FOREST_RECURSION_H_
