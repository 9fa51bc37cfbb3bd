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

#include "areamatch/matching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "areamatch/errors.hpp"

namespace areamatch {
namespace {

std::vector<FeatureSet> features_of(const AreaGraph& g) {
  std::vector<FeatureSet> out;
  out.reserve(g.areas.size());
  for (const Area& a : g.areas) {
    out.push_back(a.features ? *a.features : extract_features(a));
  }
  return out;
}

// Ranks of the k smallest entries, ties to the lower index.
std::vector<std::size_t> top_k(std::span<const double> costs, int k) {
  std::vector<std::size_t> idx(costs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (costs[a] != costs[b]) return costs[a] < costs[b];
    return a < b;
  });
  if (idx.size() > static_cast<std::size_t>(k)) idx.resize(static_cast<std::size_t>(k));
  return idx;
}

}  // namespace

WeightVector WeightVector::normalized(double wa, double wp, double wl) {
  if (wa < 0 || wp < 0 || wl < 0) throw ConfigError("weights must be nonnegative");
  const double sum = wa + wp + wl;
  if (!(sum > 0) || !std::isfinite(sum)) throw ConfigError("weights must have a positive sum");
  return {wa / sum, wp / sum, wl / sum};
}

double weighted_cost(const FeatureCostVector& v, const WeightVector& w) {
  double cost = w.area * v.area_cost;
  double active = w.area;
  if (v.passage_cost) {
    cost += w.passage * *v.passage_cost;
    active += w.passage;
  }
  if (v.hull_cost) {
    cost += w.hull * *v.hull_cost;
    active += w.hull;
  }
  if (active > 0) return cost / active;
  // Every active weight is zero (the weight mass sits on the unavailable
  // feature): average the available costs instead of dividing by zero.
  double sum = v.area_cost;
  double n = 1.0;
  if (v.passage_cost) {
    sum += *v.passage_cost;
    n += 1.0;
  }
  if (v.hull_cost) {
    sum += *v.hull_cost;
    n += 1.0;
  }
  return sum / n;
}

CostMatrix cost_matrix(const AreaGraph& a, const AreaGraph& b, const WeightVector& w) {
  if (a.areas.empty() || b.areas.empty()) throw EmptyGraphError("cannot match an empty graph");
  const auto fa = features_of(a);
  const auto fb = features_of(b);
  CostMatrix m;
  m.rows = fa.size();
  m.cols = fb.size();
  m.values.resize(m.rows * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      m.at(i, j) = weighted_cost(feature_cost_vector(fa[i], fb[j]), w);
    }
  }
  return m;
}

std::vector<IndexPair> mutual_knn_indices(const CostMatrix& m, int k) {
  std::vector<IndexPair> pairs;
  if (m.rows == 0 || m.cols == 0 || k < 1) return pairs;

  std::vector<std::vector<std::size_t>> row_best(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    row_best[i] = top_k(std::span<const double>(m.values).subspan(i * m.cols, m.cols), k);
  }
  std::vector<double> col(m.rows);
  std::vector<std::vector<std::size_t>> col_best(m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (std::size_t i = 0; i < m.rows; ++i) col[i] = m.at(i, j);
    col_best[j] = top_k(col, k);
  }

  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j : row_best[i]) {
      const auto& cb = col_best[j];
      if (std::find(cb.begin(), cb.end(), i) != cb.end()) {
        pairs.push_back({i, j, m.at(i, j)});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const IndexPair& a, const IndexPair& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  });
  return pairs;
}

std::vector<MatchPair> mutual_knn_pairs(const AreaGraph& a, const AreaGraph& b,
                                        const CostMatrix& m, int k) {
  const auto fa = features_of(a);
  const auto fb = features_of(b);
  std::vector<MatchPair> out;
  for (const IndexPair& ip : mutual_knn_indices(m, k)) {
    const FeatureSet& fi = fa[ip.row];
    const FeatureSet& fj = fb[ip.col];
    MatchPair p;
    p.area_id_a = a.areas[ip.row].id;
    p.area_id_b = b.areas[ip.col].id;
    p.total_cost = ip.cost;
    if (fi.has_passage_distances && fj.has_passage_distances) {
      const auto pm = passage_distance_match(fi.passage_distances, fj.passage_distances);
      p.kind = SegmentKind::kPassageDistance;
      p.segment_a = fi.passage_segments[pm->index_a];
      p.segment_b = fj.passage_segments[pm->index_b];
    } else {
      p.kind = SegmentKind::kHullLongest;
      p.segment_a = fi.hull_segment;
      p.segment_b = fj.hull_segment;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace areamatch
