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

#include "areamatch/features.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "areamatch/area_graph.hpp"
#include "areamatch/errors.hpp"

namespace areamatch {

FeatureSet extract_features(const Area& a) {
  FeatureSet f;
  f.area_size = polygon_area(a.polygon);

  const Polygon2 hull = convex_hull(a.polygon.vertices());
  f.hull_segment = hull_diameter_segment(hull);
  f.hull_longest = length(f.hull_segment);

  const std::vector<Point2> passages = passages_of(a);
  f.has_passage_distances = passages.size() >= 2;
  for (std::size_t i = 0; i < passages.size(); ++i) {
    for (std::size_t j = i + 1; j < passages.size(); ++j) {
      const double d = distance(passages[i], passages[j]);
      if (d <= kPointEps) continue;  // coincident passages carry no distance
      f.passage_distances.push_back(d);
      f.passage_segments.push_back({passages[i], passages[j]});
    }
  }
  // Sort distances ascending, segments in lockstep; ties resolve by the
  // segment endpoints so the order is reproducible.
  std::vector<std::size_t> order(f.passage_distances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (f.passage_distances[x] != f.passage_distances[y]) {
      return f.passage_distances[x] < f.passage_distances[y];
    }
    return x < y;
  });
  std::vector<double> pd;
  std::vector<Segment2> ps;
  pd.reserve(order.size());
  ps.reserve(order.size());
  for (std::size_t i : order) {
    pd.push_back(f.passage_distances[i]);
    ps.push_back(f.passage_segments[i]);
  }
  f.passage_distances = std::move(pd);
  f.passage_segments = std::move(ps);

  // Passages sit on the polygon boundary, so no pairwise distance can beat
  // the hull diameter by more than rounding.
  assert(f.passage_distances.empty() ||
         f.passage_distances.back() <= f.hull_longest + 1e-6);
  return f;
}

void fill_features(AreaGraph& g) {
  for (Area& a : g.areas) {
    if (!a.features) a.features = extract_features(a);
  }
}

double area_size_cost(double ai, double aj) {
  if (!(ai > 0.0) || !(aj > 0.0)) throw DomainError("area sizes must be positive");
  return std::abs(std::sqrt(ai) - std::sqrt(aj)) / std::sqrt(std::max(ai, aj));
}

std::optional<PassageMatch> passage_distance_match(std::span<const double> pd_i,
                                                   std::span<const double> pd_j) {
  if (pd_i.empty() || pd_j.empty()) return std::nullopt;
  PassageMatch best{2.0, 0, 0};
  for (std::size_t n = 0; n < pd_i.size(); ++n) {
    for (std::size_t m = 0; m < pd_j.size(); ++m) {
      const double c = std::abs(pd_i[n] - pd_j[m]) / std::max(pd_i[n], pd_j[m]);
      if (c < best.cost) best = {c, n, m};
    }
  }
  return best;
}

std::optional<double> passage_distance_cost(std::span<const double> pd_i,
                                            std::span<const double> pd_j) {
  const auto m = passage_distance_match(pd_i, pd_j);
  if (!m) return std::nullopt;
  return m->cost;
}

double hull_longest_cost(double ld_i, double ld_j) {
  if (!(ld_i > 0.0) || !(ld_j > 0.0)) throw DomainError("hull distances must be positive");
  return std::abs(ld_i - ld_j) / std::max(ld_i, ld_j);
}

FeatureCostVector feature_cost_vector(const FeatureSet& fa, const FeatureSet& fb) {
  FeatureCostVector v;
  v.area_cost = area_size_cost(fa.area_size, fb.area_size);
  if (fa.has_passage_distances && fb.has_passage_distances) {
    v.passage_cost = passage_distance_cost(fa.passage_distances, fb.passage_distances);
  }
  if (!v.passage_cost) {
    // The hull feature substitutes only when a passage distance cannot be
    // obtained for the pair.
    v.hull_cost = hull_longest_cost(fa.hull_longest, fb.hull_longest);
  }
  return v;
}

}  // namespace areamatch
