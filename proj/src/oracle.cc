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

#include "treedist/oracle.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "treedist/errors.h"
#include "treedist/matrix.h"

namespace treedist {
namespace {

// Pairwise relation tables for one tree.
struct Relations {
  explicit Relations(const LabeledTree& t)
      : anc(t.size(), t.size(), false), left(t.size(), t.size(), false) {
    for (NodeId u = 0; u < t.size(); ++u) {
      for (NodeId v = 0; v < t.size(); ++v) {
        anc(u, v) = t.IsAncestor(u, v);
        left(u, v) = u < v && !t.IsAncestor(u, v);
      }
    }
  }
  Matrix<char> anc;
  Matrix<char> left;
};

class Enumerator {
 public:
  Enumerator(const LabeledTree& t1, const LabeledTree& t2,
             const std::function<void(const EditMapping&)>& visit)
      : t1_(t1), t2_(t2), r1_(t1), r2_(t2), visit_(visit),
        used_(t2.size(), false) {}

  void Run() { Extend(0); }

 private:
  bool Compatible(NodeId u, NodeId v) const {
    for (const auto& [x, y] : current_.pairs) {
      // x < u in preorder, so u is never an ancestor of x nor left of it.
      if (r1_.anc(x, u) != r2_.anc(y, v)) return false;
      if (r2_.anc(v, y)) return false;
      if (r1_.left(x, u) != r2_.left(y, v)) return false;
      if (r2_.left(v, y)) return false;
    }
    return true;
  }

  void Extend(NodeId u) {
    if (u == t1_.size()) {
      visit_(current_);
      return;
    }
    Extend(u + 1);
    for (NodeId v = 0; v < t2_.size(); ++v) {
      if (used_[v] || !Compatible(u, v)) continue;
      used_[v] = true;
      current_.pairs.emplace_back(u, v);
      Extend(u + 1);
      current_.pairs.pop_back();
      used_[v] = false;
    }
  }

  const LabeledTree& t1_;
  const LabeledTree& t2_;
  Relations r1_;
  Relations r2_;
  const std::function<void(const EditMapping&)>& visit_;
  std::vector<bool> used_;
  EditMapping current_;
};

void CheckCap(const LabeledTree& t1, const LabeledTree& t2) {
  const int cap = OracleSizeCap();
  if (t1.size() > cap || t2.size() > cap) {
    throw SizeCapError("oracle is limited to trees of at most " +
                       std::to_string(cap) + " nodes (got " +
                       std::to_string(t1.size()) + " and " +
                       std::to_string(t2.size()) + ")");
  }
}

}  // namespace

int OracleSizeCap() {
  const char* env = std::getenv("TREEDIST_MAX_ORACLE");
  if (env == nullptr) return kDefaultOracleCap;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value <= 0) return kDefaultOracleCap;
  return value;
}

void EnumerateMappings(const LabeledTree& t1, const LabeledTree& t2,
                       const std::function<void(const EditMapping&)>& visit) {
  CheckCap(t1, t2);
  Enumerator(t1, t2, visit).Run();
}

OracleResult OracleDistance(const LabeledTree& t1, const LabeledTree& t2,
                            const CostModel& model, MappingModel which) {
  OracleResult result;
  EnumerateMappings(t1, t2, [&](const EditMapping& mapping) {
    ++result.mappings;
    const auto cost = PriceMapping(t1, t2, mapping, model, which);
    if (!cost) return;
    ++result.feasible;
    if (*cost < result.distance) {
      result.distance = *cost;
      result.mapping = mapping;
    }
  });
  return result;
}

ShapePairOracle::ShapePairOracle(const LabeledTree& shape1,
                                 const LabeledTree& shape2)
    : m_(shape1.size()), n_(shape2.size()) {
  if (m_ > 32 || n_ > 32) throw SizeCapError("ShapePairOracle: too large");
  EnumerateMappings(shape1, shape2, [&](const EditMapping& mapping) {
    Entry e;
    e.pairs = mapping.pairs;
    const auto matched1 = MatchedFlags(shape1, mapping, 0);
    const auto matched2 = MatchedFlags(shape2, mapping, 1);
    for (NodeId u = 0; u < m_; ++u) {
      if (!matched1[u]) e.unmatched1 |= 1u << u;
    }
    for (NodeId v = 0; v < n_; ++v) {
      if (!matched2[v]) e.unmatched2 |= 1u << v;
    }
    e.gaps = static_cast<int>(GapComponents(shape1, matched1).size() +
                              GapComponents(shape2, matched2).size());
    e.unmatched = __builtin_popcount(e.unmatched1) +
                  __builtin_popcount(e.unmatched2);
    e.subtree_feasible = UnmatchedAreCompleteSubtrees(shape1, matched1) &&
                         UnmatchedAreCompleteSubtrees(shape2, matched2);
    entries_.push_back(std::move(e));
  });
}

Cost ShapePairOracle::Distance(const LabeledTree& t1, const LabeledTree& t2,
                               const CostModel& model,
                               MappingModel which) const {
  if (t1.size() != m_ || t2.size() != n_) {
    throw std::invalid_argument("ShapePairOracle: shape mismatch");
  }
  Matrix<Cost> rel(m_, n_);
  for (NodeId u = 0; u < m_; ++u) {
    for (NodeId v = 0; v < n_; ++v) {
      rel(u, v) = model.RelabelCost(t1.label(u), t2.label(v));
    }
  }
  std::vector<Cost> del(m_);
  std::vector<Cost> ins(n_);
  if (which == MappingModel::kClassic) {
    for (NodeId u = 0; u < m_; ++u) del[u] = model.DeleteCost(t1.label(u));
    for (NodeId v = 0; v < n_; ++v) ins[v] = model.InsertCost(t2.label(v));
  }
  const Cost open = model.GapOpen();
  const Cost extend = model.GapExtend();

  Cost best = Cost::Infinity();
  for (const Entry& e : entries_) {
    Cost c;
    if (which == MappingModel::kClassic) {
      for (NodeId u = 0; u < m_; ++u) {
        if (e.unmatched1 >> u & 1u) c += del[u];
      }
      for (NodeId v = 0; v < n_; ++v) {
        if (e.unmatched2 >> v & 1u) c += ins[v];
      }
    } else {
      if (which == MappingModel::kSubtreeGap && !e.subtree_feasible) continue;
      c = static_cast<std::int64_t>(e.gaps) * open +
          static_cast<std::int64_t>(e.unmatched) * extend;
    }
    for (const auto& [u, v] : e.pairs) c += rel(u, v);
    if (c < best) best = c;
  }
  return best;
}

}  // namespace treedist
