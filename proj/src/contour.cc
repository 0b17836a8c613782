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

#include "treedist/contour.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "treedist/errors.h"
#include "treedist/ted_gap.h"

namespace treedist {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // Returns the surviving root.
  int Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    parent_[a] = b;
    return b;
  }

 private:
  std::vector<int> parent_;
};

// One sweep tree. For the join tree "toward" is downward (lower
// components merged at v) and "away" is the vertex that later absorbs v's
// component; the split tree is the mirror image.
struct SweepTree {
  std::vector<std::set<int>> toward;
  std::vector<int> away;
};

SweepTree Sweep(const Terrain& t, const std::vector<int>& order) {
  const int n = t.vertex_count();
  SweepTree tree{std::vector<std::set<int>>(n), std::vector<int>(n, -1)};
  std::vector<int> position(n);
  for (int k = 0; k < n; ++k) position[order[k]] = k;
  UnionFind uf(n);
  std::vector<int> head(n);
  std::iota(head.begin(), head.end(), 0);
  for (int k = 0; k < n; ++k) {
    const int v = order[k];
    for (int u : t.Neighbors(v)) {
      if (position[u] > k) continue;
      const int ru = uf.Find(u);
      const int rv = uf.Find(v);
      if (ru == rv) continue;
      tree.toward[v].insert(head[ru]);
      tree.away[head[ru]] = v;
      head[uf.Union(ru, rv)] = v;
    }
  }
  return tree;
}

std::string BucketString(std::int64_t bucket) {
  if (bucket < 0) return "n" + std::to_string(-bucket);
  return std::to_string(bucket);
}

}  // namespace

Terrain::Terrain(int rows, int cols, std::vector<Rational> heights)
    : rows_(rows), cols_(cols), heights_(std::move(heights)) {
  if (rows_ < 2 || cols_ < 2) {
    throw TerrainError("terrain must be at least 2x2, got " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (static_cast<int>(heights_.size()) != rows_ * cols_) {
    throw TerrainError("height count does not match grid size");
  }
  std::vector<int> order(vertex_count());
  std::iota(order.begin(), order.end(), 0);
  // Index order is row-major, so (height, index) is (height, row, col).
  std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
    return heights_[a] < heights_[b];
  });
  rank_.assign(vertex_count(), 0);
  for (int k = 0; k < vertex_count(); ++k) rank_[order[k]] = k;
}

Terrain Terrain::Parse(std::string_view csv) {
  std::vector<Rational> heights;
  int rows = 0;
  int cols = -1;
  std::size_t offset = 0;
  while (offset <= csv.size()) {
    auto end = csv.find('\n', offset);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = Trim(csv.substr(offset, end - offset));
    offset = end + 1;
    if (line.empty()) continue;
    int count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const std::string_view cell = Trim(line.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                  : comma - start));
      auto value = Rational::Parse(cell);
      if (!value) {
        throw TerrainError("row " + std::to_string(rows + 1) +
                           ": non-numeric cell '" + std::string(cell) + "'");
      }
      heights.push_back(*value);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols >= 0 && count != cols) {
      throw TerrainError("ragged rows: row " + std::to_string(rows + 1) +
                         " has " + std::to_string(count) + " cells, expected " +
                         std::to_string(cols));
    }
    cols = count;
    ++rows;
  }
  return Terrain(rows, std::max(cols, 0), std::move(heights));
}

Terrain Terrain::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Io", "cannot open terrain '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

std::vector<int> Terrain::Neighbors(int v) const {
  const int r = v / cols_;
  const int c = v % cols_;
  static constexpr int kDr[] = {-1, 1, 0, 0, -1, 1};
  static constexpr int kDc[] = {0, 0, -1, 1, -1, 1};
  std::vector<int> out;
  for (int k = 0; k < 6; ++k) {
    const int nr = r + kDr[k];
    const int nc = c + kDc[k];
    if (nr >= 0 && nr < rows_ && nc >= 0 && nc < cols_) {
      out.push_back(nr * cols_ + nc);
    }
  }
  return out;
}

std::string_view CriticalTypeName(CriticalType type) {
  switch (type) {
    case CriticalType::kMin:
      return "min";
    case CriticalType::kMax:
      return "max";
    case CriticalType::kJoinSaddle:
      return "saddleneg";
    case CriticalType::kSplitSaddle:
      return "saddlepos";
  }
  return "?";
}

std::string HeightBucketLabel(CriticalType type, const Rational& height,
                              const Rational& quantum) {
  if (quantum <= Rational(0)) {
    throw TerrainError("quantum must be positive");
  }
  return std::string(CriticalTypeName(type)) + "_" +
         BucketString((height / quantum).Floor());
}

ContourTree BuildContourTree(const Terrain& terrain, const Rational& quantum) {
  const int n = terrain.vertex_count();
  std::vector<int> up(n);
  for (int v = 0; v < n; ++v) up[terrain.rank(v)] = v;
  std::vector<int> down(up.rbegin(), up.rend());

  SweepTree join = Sweep(terrain, up);     // toward = lower, away = higher
  SweepTree split = Sweep(terrain, down);  // toward = higher, away = lower

  auto upper_leaf = [&](int v) {
    return split.toward[v].empty() && join.toward[v].size() == 1;
  };
  auto lower_leaf = [&](int v) {
    return join.toward[v].empty() && split.toward[v].size() == 1;
  };

  std::vector<std::pair<int, int>> arcs;  // augmented, over all vertices
  std::vector<bool> removed(n, false);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (upper_leaf(v) || lower_leaf(v)) queue.push_back(v);
  }
  int remaining = n;
  // Removes v from `keep` (where it is a leaf hanging off `keep.away[v]`)
  // and contracts it out of `other`.
  auto peel = [&](int v, SweepTree& keep, SweepTree& other) {
    const int w = keep.away[v];
    arcs.emplace_back(v, w);
    keep.toward[w].erase(v);
    const int d = *other.toward[v].begin();
    const int u = other.away[v];
    other.away[d] = u;
    if (u != -1) {
      other.toward[u].erase(v);
      other.toward[u].insert(d);
    }
    for (int x : {w, d, u}) {
      if (x != -1 && !removed[x]) queue.push_back(x);
    }
  };
  while (remaining > 1) {
    if (queue.empty()) throw std::logic_error("contour merge stalled");
    const int v = queue.front();
    queue.pop_front();
    if (removed[v]) continue;
    if (upper_leaf(v)) {
      peel(v, split, join);
    } else if (lower_leaf(v)) {
      peel(v, join, split);
    } else {
      continue;
    }
    removed[v] = true;
    --remaining;
  }

  // Contract regular vertices.
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto higher = [&](int a, int b) { return terrain.rank(a) > terrain.rank(b); };
  std::vector<int> ups(n, 0);
  std::vector<int> downs(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) (higher(w, v) ? ups[v] : downs[v])++;
  }
  auto regular = [&](int v) { return ups[v] == 1 && downs[v] == 1; };

  ContourTree out{{}, {}, LabeledTree::Parse("x")};
  std::vector<int> node_of(n, -1);
  for (int k = 0; k < n; ++k) {
    const int v = up[k];
    if (regular(v)) continue;
    CriticalType type;
    if (downs[v] == 0) {
      type = CriticalType::kMin;
    } else if (ups[v] == 0) {
      type = CriticalType::kMax;
    } else if (downs[v] >= 2) {
      type = CriticalType::kJoinSaddle;
    } else {
      type = CriticalType::kSplitSaddle;
    }
    node_of[v] = static_cast<int>(out.nodes.size());
    out.nodes.push_back({v, type});
  }
  for (const auto& node : out.nodes) {
    const int v = node.vertex;
    for (int w : adj[v]) {
      if (!higher(w, v)) continue;
      int prev = v;
      int cur = w;
      while (regular(cur)) {
        for (int x : adj[cur]) {
          if (x != prev && higher(x, cur)) {
            prev = cur;
            cur = x;
            break;
          }
        }
      }
      out.edges.emplace_back(node_of[v], node_of[cur]);
    }
  }

  // Root at the global minimum, which is node 0 (nodes are in rank order).
  const int k = static_cast<int>(out.nodes.size());
  std::vector<std::vector<int>> nbr(k);
  for (const auto& [a, b] : out.edges) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<int> parent(k, -1);
  std::vector<int> order = {0};
  parent[0] = 0;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    for (int w : nbr[order[idx]]) {
      if (parent[w] == -1) {
        parent[w] = order[idx];
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != k) {
    throw std::logic_error("contour tree is not connected");
  }
  // Node indices follow rank, so the lowest vertex of a subtree is the
  // smallest node index in it.
  std::vector<int> lowest(k);
  std::iota(lowest.begin(), lowest.end(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) lowest[parent[*it]] = std::min(lowest[parent[*it]], lowest[*it]);
  }
  std::vector<std::vector<int>> kids(k);
  for (int v : order) {
    if (v != 0) kids[parent[v]].push_back(v);
  }
  auto label = [&](int v) {
    return HeightBucketLabel(out.nodes[v].type,
                             terrain.height(out.nodes[v].vertex), quantum);
  };
  LabeledTree::Builder builder;
  std::vector<std::pair<int, NodeId>> stack = {{0, builder.AddRoot(label(0))}};
  while (!stack.empty()) {
    const auto [v, id] = stack.back();
    stack.pop_back();
    auto& ks = kids[v];
    std::sort(ks.begin(), ks.end(),
              [&](int a, int b) { return lowest[a] < lowest[b]; });
    for (int c : ks) stack.emplace_back(c, builder.AddChild(id, label(c)));
  }
  out.tree = std::move(builder).Build();
  return out;
}

TerrainComparison CompareTerrains(const Terrain& a, const Terrain& b,
                                  const CostModel& model,
                                  const Rational& quantum) {
  ContourTree ca = BuildContourTree(a, quantum);
  ContourTree cb = BuildContourTree(b, quantum);
  const Cost d = GapDistanceSubtree(ca.tree, cb.tree, model, false).distance;
  return {d, std::move(ca.tree), std::move(cb.tree)};
}

}  // namespace treedist
