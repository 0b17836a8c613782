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

#include "treedist/ted_gap.h"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treedist/errors.h"
#include "treedist/matrix.h"

namespace treedist {
namespace {

struct Cell {
  Cost q = Cost::Infinity();
  Cost del = Cost::Infinity();
  Cost ins = Cost::Infinity();
};

// Preorder view with ordinals 1..size and 0 as the virtual anchor above
// the root. Node ids are already preorder, so ordinal = id + 1.
class PreorderView {
 public:
  explicit PreorderView(const LabeledTree& t) : tree_(t) {
    const int n = t.size();
    r_.assign(n + 1, n);
    parent_.assign(n + 1, 0);
    size_.assign(n + 1, n);
    kids_.assign(n + 1, {});
    kids_[0] = {1};
    for (NodeId v = 0; v < n; ++v) {
      r_[v + 1] = t.last_descendant(v) + 1;
      parent_[v + 1] = t.parent(v) + 1;  // kNoNode maps to 0
      size_[v + 1] = t.subtree_size(v);
      for (NodeId c : t.children(v)) kids_[v + 1].push_back(c + 1);
    }
  }

  int size() const { return tree_.size(); }
  int r(int i) const { return r_[i]; }
  int parent(int i) const { return parent_[i]; }
  int subtree_size(int i) const { return size_[i]; }
  const std::vector<int>& kids(int i) const { return kids_[i]; }
  const std::string& label(int i) const { return tree_.label(i - 1); }

 private:
  const LabeledTree& tree_;
  std::vector<int> r_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::vector<int>> kids_;
};

class GapDp {
 public:
  GapDp(const LabeledTree& t1, const LabeledTree& t2, const CostModel& model,
        bool subtree)
      : v1_(t1),
        v2_(t2),
        m_(t1.size()),
        n_(t2.size()),
        subtree_(subtree),
        open_(model.GapOpen()),
        extend_(model.GapExtend()),
        rel_(m_ + 1, n_ + 1),
        tb_(m_ + 1, n_ + 1, Cost::Infinity()) {
    for (int i = 1; i <= m_; ++i) {
      for (int j = 1; j <= n_; ++j) {
        rel_(i, j) = model.RelabelCost(v1_.label(i), v2_.label(j));
      }
    }
  }

  Cost Run(GapCounters* counters) {
    for (int x = m_; x >= 1; --x) {
      for (int y = n_; y >= 1; --y) {
        tb_(x, y) = Fill(x, y, counters);
        ++counters->anchor_pairs;
      }
    }
    ++counters->anchor_pairs;
    return Fill(0, 0, counters);
  }

  EditMapping Trace() {
    EditMapping mapping;
    std::vector<std::pair<int, int>> pending = {{0, 0}};
    while (!pending.empty()) {
      const auto [x, y] = pending.back();
      pending.pop_back();
      Fill(x, y, nullptr);
      if (subtree_) {
        TraceSubtree(x, y, &mapping, &pending);
      } else {
        TraceGeneral(x, y, &mapping, &pending);
      }
    }
    mapping.Normalize();
    return mapping;
  }

 private:
  Cost Start1(int i, int anchor) const {
    return v1_.parent(i) == anchor ? open_ + extend_ : extend_;
  }
  Cost Start2(int j, int anchor) const {
    return v2_.parent(j) == anchor ? open_ + extend_ : extend_;
  }
  Cost WholeSubtree1(int i) const {
    return open_ + static_cast<std::int64_t>(v1_.subtree_size(i)) * extend_;
  }
  Cost WholeSubtree2(int j) const {
    return open_ + static_cast<std::int64_t>(v2_.subtree_size(j)) * extend_;
  }

  // Fills table_ for anchor (x, y) and returns its top-left Q.
  Cost Fill(int x, int y, GapCounters* counters) {
    return subtree_ ? FillSubtree(x, y, counters) : FillGeneral(x, y, counters);
  }

  // Local row i - (x + 1), column j - (y + 1).
  Cost FillGeneral(int x, int y, GapCounters* counters) {
    const int e1 = v1_.r(x) + 1;
    const int e2 = v2_.r(y) + 1;
    const int rows = e1 - x;
    const int cols = e2 - y;
    table_.Reset(rows, cols);
    if (counters) counters->cells += static_cast<long long>(rows - 1) * (cols - 1);
    auto at = [&](int i, int j) -> Cell& { return table_(i - x - 1, j - y - 1); };
    at(e1, e2).q = Cost(0);
    for (int j = e2 - 1; j > y; --j) {
      Cell& c = at(e1, j);
      c.ins = Start2(j, y) + at(e1, j + 1).q;
      c.q = c.ins;
    }
    for (int i = e1 - 1; i > x; --i) {
      Cell& c = at(i, e2);
      c.del = Start1(i, x) + at(i + 1, e2).q;
      c.q = c.del;
      for (int j = e2 - 1; j > y; --j) {
        Cell& d = at(i, j);
        d.del = Start1(i, x) + at(i + 1, j).q;
        d.ins = Start2(j, y) + at(i, j + 1).q;
        const Cost match =
            rel_(i, j) + tb_(i, j) + at(v1_.r(i) + 1, v2_.r(j) + 1).q;
        d.q = std::min({match, d.del, d.ins});
      }
    }
    return at(x + 1, y + 1).q;
  }

  void TraceGeneral(int x, int y, EditMapping* mapping,
                    std::vector<std::pair<int, int>>* pending) {
    const int e1 = v1_.r(x) + 1;
    const int e2 = v2_.r(y) + 1;
    auto at = [&](int i, int j) -> Cell& { return table_(i - x - 1, j - y - 1); };
    int i = x + 1;
    int j = y + 1;
    while (i < e1 || j < e2) {
      const Cell& c = at(i, j);
      if (i < e1 && j < e2 &&
          c.q == rel_(i, j) + tb_(i, j) + at(v1_.r(i) + 1, v2_.r(j) + 1).q) {
        mapping->pairs.emplace_back(i - 1, j - 1);
        pending->emplace_back(i, j);
        i = v1_.r(i) + 1;
        j = v2_.r(j) + 1;
      } else if (i < e1 && c.q == c.del) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Rows are the children of x in order plus one end row; likewise columns.
  Cost FillSubtree(int x, int y, GapCounters* counters) {
    const auto& k1 = v1_.kids(x);
    const auto& k2 = v2_.kids(y);
    const int rows = static_cast<int>(k1.size()) + 1;
    const int cols = static_cast<int>(k2.size()) + 1;
    table_.Reset(rows, cols);
    if (counters) counters->cells += static_cast<long long>(rows - 1) * (cols - 1);
    // The jump from child a to child a + 1 skips exactly the subtree of a.
    for (int a = 0; a + 1 < rows; ++a) {
      const int next = a + 2 < rows ? k1[a + 1] : v1_.r(x) + 1;
      if (v1_.r(k1[a]) + 1 != next ||
          v1_.r(k1[a]) - k1[a] + 1 != v1_.subtree_size(k1[a])) {
        throw std::logic_error("preorder subtree is not contiguous");
      }
    }
    table_(rows - 1, cols - 1).q = Cost(0);
    for (int b = cols - 2; b >= 0; --b) {
      Cell& c = table_(rows - 1, b);
      c.ins = WholeSubtree2(k2[b]) + table_(rows - 1, b + 1).q;
      c.q = c.ins;
    }
    for (int a = rows - 2; a >= 0; --a) {
      Cell& c = table_(a, cols - 1);
      c.del = WholeSubtree1(k1[a]) + table_(a + 1, cols - 1).q;
      c.q = c.del;
      for (int b = cols - 2; b >= 0; --b) {
        Cell& d = table_(a, b);
        d.del = WholeSubtree1(k1[a]) + table_(a + 1, b).q;
        d.ins = WholeSubtree2(k2[b]) + table_(a, b + 1).q;
        const Cost match =
            rel_(k1[a], k2[b]) + tb_(k1[a], k2[b]) + table_(a + 1, b + 1).q;
        d.q = std::min({match, d.del, d.ins});
      }
    }
    return table_(0, 0).q;
  }

  void TraceSubtree(int x, int y, EditMapping* mapping,
                    std::vector<std::pair<int, int>>* pending) {
    const auto& k1 = v1_.kids(x);
    const auto& k2 = v2_.kids(y);
    const int rows = static_cast<int>(k1.size()) + 1;
    const int cols = static_cast<int>(k2.size()) + 1;
    int a = 0;
    int b = 0;
    while (a < rows - 1 || b < cols - 1) {
      const Cell& c = table_(a, b);
      if (a < rows - 1 && b < cols - 1 &&
          c.q == rel_(k1[a], k2[b]) + tb_(k1[a], k2[b]) +
                     table_(a + 1, b + 1).q) {
        mapping->pairs.emplace_back(k1[a] - 1, k2[b] - 1);
        pending->emplace_back(k1[a], k2[b]);
        ++a;
        ++b;
      } else if (a < rows - 1 && c.q == c.del) {
        ++a;
      } else {
        ++b;
      }
    }
  }

  PreorderView v1_;
  PreorderView v2_;
  int m_;
  int n_;
  bool subtree_;
  Cost open_;
  Cost extend_;
  Matrix<Cost> rel_;
  Matrix<Cost> tb_;  // children-forest distance under a matched (i, j)
  Matrix<Cell> table_;
};

void RequireBinary(const LabeledTree& t) {
  const NodeId v = t.FindNodeWithArityAbove(2);
  if (v != kNoNode) {
    throw NotBinaryError("node " + t.label(v) + " has " +
                         std::to_string(t.children(v).size()) + " children");
  }
}

bool CheckBound(long long cells, long long bound, std::string* why) {
  if (cells <= bound) return true;
  if (why) {
    *why = "cells " + std::to_string(cells) + " > " + std::to_string(bound);
  }
  return false;
}

}  // namespace

GapResult GapDistanceGeneral(const LabeledTree& t1, const LabeledTree& t2,
                             const CostModel& model,
                             const GapOptions& options) {
  if (options.require_binary) {
    RequireBinary(t1);
    RequireBinary(t2);
  }
  GapDp dp(t1, t2, model, /*subtree=*/false);
  GapResult result;
  result.distance = dp.Run(&result.counters);
  if (options.with_mapping) result.mapping = dp.Trace();
  return result;
}

GapResult GapDistanceSubtree(const LabeledTree& t1, const LabeledTree& t2,
                             const CostModel& model, bool with_mapping) {
  GapDp dp(t1, t2, model, /*subtree=*/true);
  GapResult result;
  result.distance = dp.Run(&result.counters);
  if (with_mapping) result.mapping = dp.Trace();
  return result;
}

bool VerifyGeneralGapComplexity(int m, int n, const GapCounters& counters,
                                std::string* why) {
  const long long mm = m;
  const long long nn = n;
  return CheckBound(counters.cells, 4 * (7 + mm + nn) * mm * mm * nn * nn,
                    why);
}

bool VerifySubtreeGapComplexity(int m, int n, const GapCounters& counters,
                                std::string* why) {
  const long long mm = m;
  const long long nn = n;
  return CheckBound(counters.cells, 4 * mm * mm * nn * nn, why);
}

}  // namespace treedist
