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

#ifndef AREAMATCH_TRANSFORM_ESTIMATION_HPP_
#define AREAMATCH_TRANSFORM_ESTIMATION_HPP_

#include <span>
#include <vector>

#include "areamatch/area_graph.hpp"
#include "areamatch/config.hpp"
#include "areamatch/grid_map.hpp"
#include "areamatch/matching.hpp"

namespace areamatch {

// One candidate rotation between the maps: the angle carrying the matched
// segment of map A onto its counterpart in map B, with the segment midpoints
// as rotation centers. Kept only when the induced per-pair overlap passes
// verification.
struct RotationHypothesis {
  double alpha = 0.0;   // radians in (-pi, pi]
  Point2 center_a;      // midpoint of the matched segment in map A
  Point2 center_b;      // midpoint of the matched segment in map B
  MatchPair pair;
  double pair_overlap = 0.0;  // OP of the verified candidate, in [0, 1]
};

struct RotationCluster {
  double center = 0.0;  // circular mean of member angles
  std::vector<RotationHypothesis> members;
};

struct PhaseTimings {
  double segmentation_s = 0.0;
  double matching_s = 0.0;
  double total_s = 0.0;
};

struct MatchResult {
  RigidTransform2D transform;      // maps map-A coordinates into map B
  double overlap_sum = 0.0;
  int best_cluster_size = 0;
  std::vector<MatchPair> matched_pairs;  // pairs surviving overlap verification
  PhaseTimings timings;
};

// Evaluates the 0-2 undirected-angle candidates of a matched pair and keeps
// those whose overlap percentage OP = overlap_area / min(a_i, a_j) reaches
// `overlap_threshold`.
std::vector<RotationHypothesis> pair_hypotheses(const MatchPair& pair, const Area& area_a,
                                                const Area& area_b, double overlap_threshold);

// Greedy sequential clustering in list order, followed by reassignment
// passes until every member sits within `angle_threshold` of its cluster's
// circular mean (members that cannot are split off). All distances are
// circular. Throws NoHypothesesError on empty input.
std::vector<RotationCluster> cluster_rotations(std::vector<RotationHypothesis> hypotheses,
                                               double angle_threshold, int max_passes = 20);

// Cluster with the most members; ties resolve to the higher summed
// pair_overlap, then the lower cluster index.
const RotationCluster& best_cluster(std::span<const RotationCluster> clusters);

// Scores every sample of the cluster by summing OP over `pairs` under the
// sample's transform and returns the argmax sample's transform.
MatchResult select_best_transform(const RotationCluster& cluster,
                                  std::span<const MatchPair> pairs, const AreaGraph& a,
                                  const AreaGraph& b);

// Full pipeline on segmented inputs; segmentation_s is reported as 0.
MatchResult match_maps(const AreaGraph& a, const AreaGraph& b, const MatchConfig& config);

// Full pipeline including segmentation of both grids.
MatchResult match_maps(const GridMap& a, const GridMap& b, const MatchConfig& config);

// Mixed-input entry point: each side is either a grid (segmented here) or an
// already segmented graph. Exactly one pointer per side must be non-null.
struct MapInput {
  const GridMap* grid = nullptr;
  const AreaGraph* graph = nullptr;
};
MatchResult match_maps(const MapInput& a, const MapInput& b, const MatchConfig& config);

}  // namespace areamatch

#endif  // AREAMATCH_TRANSFORM_ESTIMATION_HPP_
