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

#ifndef TREEDIST_CONTOUR_H_
#define TREEDIST_CONTOUR_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treedist/cost.h"
#include "treedist/rational.h"
#include "treedist/tree.h"

namespace treedist {

// Height field on a rows x cols grid. Each square is split along its
// NW-SE diagonal, so the neighbours of (r, c) are the four axis neighbours
// plus (r-1, c-1) and (r+1, c+1). Ties are broken by (row, col), making
// the vertex order total.
class Terrain {
 public:
  // Throws TerrainError on ragged rows, non-numeric cells or grids smaller
  // than 2 x 2.
  Terrain(int rows, int cols, std::vector<Rational> heights);

  // Comma-separated rows; blank lines ignored. Cells may be integers,
  // "n/d" or decimals.
  static Terrain Parse(std::string_view csv);
  static Terrain Load(const std::string& path);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int vertex_count() const { return rows_ * cols_; }
  const Rational& height(int v) const { return heights_[v]; }
  // Position of v in the perturbed total order; 0 is the global minimum.
  int rank(int v) const { return rank_[v]; }
  std::vector<int> Neighbors(int v) const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> heights_;
  std::vector<int> rank_;
};

enum class CriticalType { kMin, kMax, kJoinSaddle, kSplitSaddle };

// "min", "max", "saddleneg" (join), "saddlepos" (split).
std::string_view CriticalTypeName(CriticalType type);

struct ContourNode {
  int vertex;  // grid index row * cols + col
  CriticalType type;
};

struct ContourTree {
  // Nodes and undirected edges before rooting; edges are node indices.
  std::vector<ContourNode> nodes;
  std::vector<std::pair<int, int>> edges;
  // Rooted at the global minimum; children ordered by the lowest vertex
  // (in the perturbed order) of their subtree. Labels are
  // "<type>_<bucket>" with bucket = floor(height / quantum), written with
  // a leading 'n' instead of '-' when negative.
  LabeledTree tree;
};

// Join and split trees by union-find sweeps, merged by repeatedly peeling
// leaves, then regular vertices (one edge up, one down) are contracted.
ContourTree BuildContourTree(const Terrain& terrain,
                             const Rational& quantum = Rational(1));

std::string HeightBucketLabel(CriticalType type, const Rational& height,
                              const Rational& quantum);

struct TerrainComparison {
  Cost distance;
  LabeledTree tree1;
  LabeledTree tree2;
};

// Complete-subtree-gap distance between the two contour trees.
TerrainComparison CompareTerrains(const Terrain& a, const Terrain& b,
                                  const CostModel& model,
                                  const Rational& quantum = Rational(1));

}  // namespace treedist

#endif  // TREEDIST_CONTOUR_H_
