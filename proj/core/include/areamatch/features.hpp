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

#ifndef AREAMATCH_FEATURES_HPP_
#define AREAMATCH_FEATURES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "areamatch/geometry.hpp"

namespace areamatch {

struct Area;
struct AreaGraph;

// Per-area matching features. `passage_distances` holds the lengths of all
// C(n, 2) passage pairs sorted ascending; `passage_segments` is aligned with
// it so the pair realizing a cost can be recovered.
struct FeatureSet {
  double area_size = 0.0;                   // m^2
  std::vector<double> passage_distances;    // m, sorted ascending
  std::vector<Segment2> passage_segments;   // aligned with passage_distances
  double hull_longest = 0.0;                // m
  Segment2 hull_segment;                    // endpoints realizing hull_longest
  bool has_passage_distances = false;       // true iff >= 2 passages
};

// One row of the feature-cost table for an area pair. `area_cost` is always
// present; exactly one of `passage_cost` / `hull_cost` is set, following the
// rule that the hull feature stands in only when a passage distance cannot
// be obtained on both sides.
struct FeatureCostVector {
  double area_cost = 0.0;
  std::optional<double> passage_cost;
  std::optional<double> hull_cost;
};

// Argmin passage-distance pairing between two areas.
struct PassageMatch {
  double cost = 0.0;
  std::size_t index_a = 0;
  std::size_t index_b = 0;
};

FeatureSet extract_features(const Area& a);

// Memoizes extract_features into every area of the graph.
void fill_features(AreaGraph& g);

// |sqrt(ai) - sqrt(aj)| / sqrt(max(ai, aj)); throws DomainError for
// nonpositive areas.
double area_size_cost(double ai, double aj);

// min over pairs of |pd_n - pd_m| / max(pd_n, pd_m); empty input on either
// side yields nullopt. Ties resolve to the smallest index pair.
std::optional<PassageMatch> passage_distance_match(std::span<const double> pd_i,
                                                   std::span<const double> pd_j);
std::optional<double> passage_distance_cost(std::span<const double> pd_i,
                                            std::span<const double> pd_j);

// |ld_i - ld_j| / max(ld_i, ld_j); throws DomainError for nonpositive input.
double hull_longest_cost(double ld_i, double ld_j);

FeatureCostVector feature_cost_vector(const FeatureSet& fa, const FeatureSet& fb);

}  // namespace areamatch

#endif  // AREAMATCH_FEATURES_HPP_
