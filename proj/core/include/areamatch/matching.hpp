// Copyright 2026 The AreaMatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AREAMATCH_MATCHING_HPP_
#define AREAMATCH_MATCHING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "areamatch/area_graph.hpp"
#include "areamatch/features.hpp"

namespace areamatch {

// Nonnegative feature weights (area, passage, hull) summing to 1.
struct WeightVector {
  double area = 0.1;
  double passage = 0.1;
  double hull = 0.8;

  // Scales an arbitrary nonnegative triple to unit sum; throws ConfigError
  // for negative entries or an all-zero triple.
  static WeightVector normalized(double wa, double wp, double wl);
};

// Weighted feature cost for one pair. Weights of unavailable features are
// dropped and the remainder rescaled to unit sum; when every active weight
// is zero the available costs are averaged instead.
double weighted_cost(const FeatureCostVector& v, const WeightVector& w);

// Dense |A| x |B| total-cost table, rows and columns in ascending-id order.
struct CostMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
};

enum class SegmentKind { kPassageDistance, kHullLongest };

// A surviving mutual match plus the feature segments that realized its
// cost; the segments feed rotation estimation.
struct MatchPair {
  int area_id_a = 0;
  int area_id_b = 0;
  double total_cost = 0.0;
  Segment2 segment_a;
  Segment2 segment_b;
  SegmentKind kind = SegmentKind::kHullLongest;
};

// Throws EmptyGraphError when either graph has no areas. Uses memoized
// features when present, otherwise extracts them on the fly.
CostMatrix cost_matrix(const AreaGraph& a, const AreaGraph& b, const WeightVector& w);

struct IndexPair {
  std::size_t row = 0;
  std::size_t col = 0;
  double cost = 0.0;
};

// Pairs (i, j) where j ranks within the k lowest costs of row i and i ranks
// within the k lowest costs of column j. Ties in cost resolve to the lower
// index. Output sorted by (cost, row, col).
std::vector<IndexPair> mutual_knn_indices(const CostMatrix& m, int k);

// Same filter, decorated with area ids and matched feature segments.
std::vector<MatchPair> mutual_knn_pairs(const AreaGraph& a, const AreaGraph& b,
                                        const CostMatrix& m, int k);

}  // namespace areamatch

#endif  // AREAMATCH_MATCHING_HPP_
