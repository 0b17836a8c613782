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

#include "treedist/ted_classic.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "treedist/indexed_tree.h"

namespace treedist {
namespace {

class ZhangShasha {
 public:
  ZhangShasha(const LabeledTree& t1, const LabeledTree& t2,
              const CostModel& model)
      : p1_(IndexedTree::Index(t1, Traversal::kPostorder)),
        p2_(IndexedTree::Index(t2, Traversal::kPostorder)),
        m_(p1_.size()),
        n_(p2_.size()),
        rel_(m_ + 1, n_ + 1),
        del_(m_ + 1),
        ins_(n_ + 1),
        td_(m_ + 1, n_ + 1, Cost::Infinity()) {
    for (int i = 1; i <= m_; ++i) del_[i] = model.DeleteCost(p1_.label(i));
    for (int j = 1; j <= n_; ++j) ins_[j] = model.InsertCost(p2_.label(j));
    for (int i = 1; i <= m_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        rel_(i, j) = model.RelabelCost(p1_.label(i), p2_.label(j));
      }
    }
  }

  void Run(ClassicCounters* counters) {
    for (int i1 : p1_.key_roots()) {
      for (int j1 : p2_.key_roots()) {
        ForestDist(i1, j1, counters);
        ++counters->tree_pairs;
      }
    }
  }

  // Backtrace; postorder ordinals converted to node ids.
  EditMapping Trace() {
    EditMapping mapping;
    std::vector<std::pair<int, int>> pending = {{m_, n_}};
    while (!pending.empty()) {
      const auto [i1, j1] = pending.back();
      pending.pop_back();
      ForestDist(i1, j1, nullptr);
      const int l1 = p1_.l(i1);
      const int l2 = p2_.l(j1);
      int i = i1;
      int j = j1;
      while (i >= l1 || j >= l2) {
        if (i < l1) {
          --j;
          continue;
        }
        if (j < l2) {
          --i;
          continue;
        }
        const Cost here = Fd(i, j, l1, l2);
        if (p1_.l(i) == l1 && p2_.l(j) == l2) {
          if (here == Fd(i - 1, j - 1, l1, l2) + rel_(i, j)) {
            mapping.pairs.emplace_back(p1_.node_at(i), p2_.node_at(j));
            --i;
            --j;
            continue;
          }
        } else if (here ==
                   Fd(p1_.l(i) - 1, p2_.l(j) - 1, l1, l2) + td_(i, j)) {
          pending.emplace_back(i, j);
          const int ni = p1_.l(i) - 1;
          j = p2_.l(j) - 1;
          i = ni;
          continue;
        }
        if (here == Fd(i - 1, j, l1, l2) + del_[i]) {
          --i;
        } else {
          --j;
        }
      }
    }
    mapping.Normalize();
    return mapping;
  }

  Matrix<Cost>& treedist() { return td_; }
  int m() const { return m_; }
  int n() const { return n_; }

 private:
  // forestdist addressed by absolute ordinals; l1 - 1 / l2 - 1 is the
  // empty forest.
  Cost& Fd(int i, int j, int l1, int l2) { return fd_(i - l1 + 1, j - l2 + 1); }

  void ForestDist(int i1, int j1, ClassicCounters* counters) {
    const int l1 = p1_.l(i1);
    const int l2 = p2_.l(j1);
    const int rows = i1 - l1 + 2;
    const int cols = j1 - l2 + 2;
    fd_.Reset(rows, cols);
    if (counters) counters->forest_cells += static_cast<long long>(rows) * cols;
    Fd(l1 - 1, l2 - 1, l1, l2) = Cost(0);
    for (int i = l1; i <= i1; ++i) {
      Fd(i, l2 - 1, l1, l2) = Fd(i - 1, l2 - 1, l1, l2) + del_[i];
    }
    for (int j = l2; j <= j1; ++j) {
      Fd(l1 - 1, j, l1, l2) = Fd(l1 - 1, j - 1, l1, l2) + ins_[j];
    }
    for (int i = l1; i <= i1; ++i) {
      for (int j = l2; j <= j1; ++j) {
        const Cost by_delete = Fd(i - 1, j, l1, l2) + del_[i];
        const Cost by_insert = Fd(i, j - 1, l1, l2) + ins_[j];
        if (p1_.l(i) == l1 && p2_.l(j) == l2) {
          const Cost by_match = Fd(i - 1, j - 1, l1, l2) + rel_(i, j);
          const Cost best = std::min({by_match, by_delete, by_insert});
          Fd(i, j, l1, l2) = best;
          td_(i, j) = best;
        } else {
          const Cost by_subtree =
              Fd(p1_.l(i) - 1, p2_.l(j) - 1, l1, l2) + td_(i, j);
          Fd(i, j, l1, l2) = std::min({by_subtree, by_delete, by_insert});
        }
      }
    }
  }

  IndexedTree p1_;
  IndexedTree p2_;
  int m_;
  int n_;
  Matrix<Cost> rel_;
  std::vector<Cost> del_;
  std::vector<Cost> ins_;
  Matrix<Cost> td_;
  Matrix<Cost> fd_;
};

}  // namespace

ClassicResult TreeDistance(const LabeledTree& t1, const LabeledTree& t2,
                           const CostModel& model, bool with_mapping) {
  ZhangShasha zs(t1, t2, model);
  ClassicResult result;
  zs.Run(&result.counters);
  result.distance = zs.treedist()(zs.m(), zs.n());
  if (with_mapping) result.mapping = zs.Trace();
  result.treedist = std::move(zs.treedist());
  return result;
}

bool VerifyClassicComplexity(const LabeledTree& t1, const LabeledTree& t2,
                             const ClassicCounters& counters,
                             std::string* why) {
  const long long m = t1.size();
  const long long n = t2.size();
  const long long c1 = std::min(t1.Depth(), t1.LeafCount());
  const long long c2 = std::min(t2.Depth(), t2.LeafCount());
  const long long bound = 4 * m * n * c1 * c2;
  if (counters.forest_cells > bound) {
    if (why) {
      *why = "forest_cells " + std::to_string(counters.forest_cells) +
             " > " + std::to_string(bound);
    }
    return false;
  }
  const long long kr1 = static_cast<long long>(
      IndexedTree::Index(t1, Traversal::kPostorder).key_roots().size());
  const long long kr2 = static_cast<long long>(
      IndexedTree::Index(t2, Traversal::kPostorder).key_roots().size());
  if (counters.tree_pairs != kr1 * kr2) {
    if (why) {
      *why = "tree_pairs " + std::to_string(counters.tree_pairs) +
             " != " + std::to_string(kr1 * kr2);
    }
    return false;
  }
  return true;
}

}  // namespace treedist
