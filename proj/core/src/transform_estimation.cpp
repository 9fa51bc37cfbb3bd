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

#include "areamatch/transform_estimation.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "areamatch/errors.hpp"
#include "areamatch/segmentation.hpp"

namespace areamatch {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// OP = overlap_area / min(a_i, a_j), clamped into [0, 1] against rounding.
double overlap_percentage(const Polygon2& transformed_a, const Polygon2& b) {
  const double area_a = polygon_area(transformed_a);
  const double area_b = polygon_area(b);
  const double overlap = polygon_overlap_area(transformed_a, b);
  return std::clamp(overlap / std::min(area_a, area_b), 0.0, 1.0);
}

// Deterministic Fisher-Yates; std::shuffle's draw sequence is
// implementation-defined, which would break reproducibility guarantees.
template <typename T>
void seeded_permutation(std::vector<T>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

std::vector<double> member_alphas(const RotationCluster& c) {
  std::vector<double> a;
  a.reserve(c.members.size());
  for (const auto& m : c.members) a.push_back(m.alpha);
  return a;
}

double cluster_overlap_sum(const RotationCluster& c) {
  double s = 0.0;
  for (const auto& m : c.members) s += m.pair_overlap;
  return s;
}

}  // namespace

std::vector<RotationHypothesis> pair_hypotheses(const MatchPair& pair, const Area& area_a,
                                                const Area& area_b, double overlap_threshold) {
  std::vector<RotationHypothesis> out;
  const Point2 center_a = midpoint(pair.segment_a);
  const Point2 center_b = midpoint(pair.segment_b);
  for (double alpha : rotation_between_segments(pair.segment_a, pair.segment_b)) {
    const RigidTransform2D t = transform_from_match(alpha, center_a, center_b);
    const double op = overlap_percentage(apply_rigid(t, area_a.polygon), area_b.polygon);
    if (op >= overlap_threshold) {
      out.push_back({alpha, center_a, center_b, pair, op});
    }
  }
  return out;
}

std::vector<RotationCluster> cluster_rotations(std::vector<RotationHypothesis> hypotheses,
                                               double angle_threshold, int max_passes) {
  if (hypotheses.empty()) throw NoHypothesesError("no rotation hypotheses to cluster");

  struct ClusterState {
    double center;
    std::vector<std::size_t> members;  // indices into `hypotheses`, input order
  };
  std::vector<ClusterState> clusters;
  std::vector<std::size_t> assignment(hypotheses.size());

  auto nearest_cluster = [&](double alpha) {
    std::size_t best = 0;
    double best_d = circular_distance(alpha, clusters[0].center);
    for (std::size_t k = 1; k < clusters.size(); ++k) {
      const double d = circular_distance(alpha, clusters[k].center);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return std::pair<std::size_t, double>{best, best_d};
  };

  auto recompute_center = [&](ClusterState& c) {
    std::vector<double> alphas;
    alphas.reserve(c.members.size());
    for (std::size_t i : c.members) alphas.push_back(hypotheses[i].alpha);
    c.center = circular_mean(alphas);
  };

  // Greedy pass: the first rotation seeds the first cluster; each following
  // one joins the nearest center within the threshold or seeds a new
  // cluster, recomputing the joined center.
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const double alpha = hypotheses[i].alpha;
    if (clusters.empty()) {
      clusters.push_back({alpha, {i}});
      assignment[i] = 0;
      continue;
    }
    const auto [k, d] = nearest_cluster(alpha);
    if (d > angle_threshold) {
      clusters.push_back({alpha, {i}});
      assignment[i] = clusters.size() - 1;
    } else {
      clusters[k].members.push_back(i);
      assignment[i] = k;
      recompute_center(clusters[k]);
    }
  }

  // Reassignment passes: members migrate to their nearest center (or split
  // off when none is within the threshold) until stable or the pass limit.
  for (int pass = 0; pass < max_passes; ++pass) {
    for (auto& c : clusters) {
      if (!c.members.empty()) recompute_center(c);
    }
    bool changed = false;
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
      const double alpha = hypotheses[i].alpha;
      const auto [k, d] = nearest_cluster(alpha);
      std::size_t target = assignment[i];
      if (d <= angle_threshold) {
        if (d < circular_distance(alpha, clusters[assignment[i]].center)) target = k;
      } else {
        clusters.push_back({alpha, {}});
        target = clusters.size() - 1;
      }
      if (target != assignment[i]) {
        auto& old_members = clusters[assignment[i]].members;
        old_members.erase(std::find(old_members.begin(), old_members.end(), i));
        clusters[target].members.push_back(i);
        assignment[i] = target;
        changed = true;
      }
    }
    std::erase_if(clusters, [](const ClusterState& c) { return c.members.empty(); });
    // Rebuild assignment after compaction.
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      for (std::size_t i : clusters[k].members) assignment[i] = k;
    }
    if (!changed) break;
  }

  // Consolidate fragments of one rotation mode: the greedy pass can split a
  // wide vote across two centers, and which fragment ends up larger would
  // then depend on the list order. Merge clusters whose centers sit within
  // twice the threshold; the enforcement below re-splits any member the
  // merged center cannot hold.
  for (;;) {
    std::size_t best_i = 0, best_j = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = circular_distance(clusters[i].center, clusters[j].center);
        if (d < best_d) {
          best_d = d;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_d > 2.0 * angle_threshold) break;
    auto& keep = clusters[best_i];
    auto& drop = clusters[best_j];
    keep.members.insert(keep.members.end(), drop.members.begin(), drop.members.end());
    recompute_center(keep);
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_j));
  }

  // Enforce the invariant outright: split off the farthest member until
  // every cluster fits within the threshold (a singleton always does).
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    for (;;) {
      recompute_center(clusters[k]);
      double worst_d = 0.0;
      std::size_t worst_pos = clusters[k].members.size();
      for (std::size_t pos = 0; pos < clusters[k].members.size(); ++pos) {
        const double d =
            circular_distance(hypotheses[clusters[k].members[pos]].alpha, clusters[k].center);
        if (d > worst_d) {
          worst_d = d;
          worst_pos = pos;
        }
      }
      if (worst_d <= angle_threshold || clusters[k].members.size() <= 1) break;
      const std::size_t i = clusters[k].members[worst_pos];
      clusters[k].members.erase(clusters[k].members.begin() +
                                static_cast<std::ptrdiff_t>(worst_pos));
      clusters.push_back({hypotheses[i].alpha, {i}});
    }
  }

  std::vector<RotationCluster> out;
  out.reserve(clusters.size());
  for (auto& c : clusters) {
    std::sort(c.members.begin(), c.members.end());  // keep input order within clusters
    RotationCluster rc;
    rc.center = c.center;
    for (std::size_t i : c.members) rc.members.push_back(hypotheses[i]);
    std::vector<double> alphas = member_alphas(rc);
    rc.center = circular_mean(alphas);
    out.push_back(std::move(rc));
  }
  return out;
}

const RotationCluster& best_cluster(std::span<const RotationCluster> clusters) {
  assert(!clusters.empty());
  std::size_t best = 0;
  for (std::size_t k = 1; k < clusters.size(); ++k) {
    const bool bigger = clusters[k].members.size() > clusters[best].members.size();
    const bool tie = clusters[k].members.size() == clusters[best].members.size();
    if (bigger || (tie && cluster_overlap_sum(clusters[k]) >
                              cluster_overlap_sum(clusters[best]) + 1e-12)) {
      best = k;
    }
  }
  return clusters[best];
}

MatchResult select_best_transform(const RotationCluster& cluster,
                                  std::span<const MatchPair> pairs, const AreaGraph& a,
                                  const AreaGraph& b) {
  assert(!cluster.members.empty());
  MatchResult result;
  result.best_cluster_size = static_cast<int>(cluster.members.size());
  result.matched_pairs.assign(pairs.begin(), pairs.end());

  double best_sum = -1.0;
  for (const RotationHypothesis& sample : cluster.members) {
    const RigidTransform2D t = transform_from_match(sample.alpha, sample.center_a, sample.center_b);
    double sum = 0.0;
    for (const MatchPair& p : pairs) {
      const Area* area_a = a.find(p.area_id_a);
      const Area* area_b = b.find(p.area_id_b);
      assert(area_a && area_b);
      sum += overlap_percentage(apply_rigid(t, area_a->polygon), area_b->polygon);
    }
    if (sum > best_sum) {
      best_sum = sum;
      result.transform = t;
    }
  }
  result.overlap_sum = best_sum;
  return result;
}

MatchResult match_maps(const AreaGraph& graph_a, const AreaGraph& graph_b,
                       const MatchConfig& config) {
  const auto t_start = Clock::now();
  MatchDiagnostics diag;
  diag.areas_a = graph_a.areas.size();
  diag.areas_b = graph_b.areas.size();

  AreaGraph a = graph_a;
  AreaGraph b = graph_b;
  fill_features(a);
  fill_features(b);

  const CostMatrix m = cost_matrix(a, b, config.weights);
  const std::vector<MatchPair> pairs = mutual_knn_pairs(a, b, m, config.k);
  diag.mutual_pairs = pairs.size();

  // Hypotheses follow the cost-sorted pair order; pairs whose candidates all
  // fail overlap verification drop out here.
  std::vector<RotationHypothesis> hypotheses;
  std::vector<MatchPair> verified;
  for (const MatchPair& p : pairs) {
    const Area* area_a = a.find(p.area_id_a);
    const Area* area_b = b.find(p.area_id_b);
    auto hs = pair_hypotheses(p, *area_a, *area_b, config.overlap_threshold);
    if (!hs.empty()) verified.push_back(p);
    for (auto& h : hs) hypotheses.push_back(std::move(h));
  }
  diag.verified_pairs = verified.size();
  diag.hypotheses = hypotheses.size();
  if (hypotheses.empty()) {
    throw MatchFailed("no rotation hypothesis passed overlap verification", diag);
  }
  if (config.seed) seeded_permutation(hypotheses, *config.seed);

  const auto clusters =
      cluster_rotations(std::move(hypotheses), config.angle_threshold, config.max_cluster_passes);
  diag.clusters = clusters.size();

  const RotationCluster& best = best_cluster(clusters);
  std::vector<MatchPair> scored;
  if (config.score_cluster_pairs_only) {
    for (const auto& mh : best.members) {
      const bool seen = std::any_of(scored.begin(), scored.end(), [&](const MatchPair& q) {
        return q.area_id_a == mh.pair.area_id_a && q.area_id_b == mh.pair.area_id_b;
      });
      if (!seen) scored.push_back(mh.pair);
    }
  } else {
    scored = verified;
  }

  MatchResult result = select_best_transform(best, scored, a, b);

  // Report only the pairs consistent with the winning transform; the pair
  // that produced the winning sample always qualifies. This drops mutual
  // matches that verified locally (a small area fits inside a larger one)
  // but disagree with the global alignment.
  std::vector<MatchPair> consistent;
  double consistent_sum = 0.0;
  for (const MatchPair& p : verified) {
    const Area* area_a = a.find(p.area_id_a);
    const Area* area_b = b.find(p.area_id_b);
    const double op =
        overlap_percentage(apply_rigid(result.transform, area_a->polygon), area_b->polygon);
    if (op >= config.overlap_threshold) {
      consistent.push_back(p);
      consistent_sum += op;
    }
  }
  result.matched_pairs = std::move(consistent);
  result.overlap_sum = consistent_sum;

  result.timings.matching_s = seconds_since(t_start);
  result.timings.total_s = result.timings.matching_s;
  return result;
}

MatchResult match_maps(const GridMap& a, const GridMap& b, const MatchConfig& config) {
  return match_maps(MapInput{&a, nullptr}, MapInput{&b, nullptr}, config);
}

MatchResult match_maps(const MapInput& a, const MapInput& b, const MatchConfig& config) {
  if ((a.grid == nullptr) == (a.graph == nullptr) ||
      (b.grid == nullptr) == (b.graph == nullptr)) {
    throw ConfigError("each match input needs exactly one of grid or graph");
  }
  const auto t_start = Clock::now();
  double segmentation_s = 0.0;

  auto resolve = [&](const MapInput& in) -> AreaGraph {
    if (in.graph) return *in.graph;
    const auto t0 = Clock::now();
    AreaGraph g = segment_grid_map(*in.grid, config.width_param);
    segmentation_s += seconds_since(t0);
    return g;
  };
  const AreaGraph ga = resolve(a);
  const AreaGraph gb = resolve(b);

  MatchResult result = match_maps(ga, gb, config);
  result.timings.segmentation_s = segmentation_s;
  result.timings.total_s = seconds_since(t_start);
  return result;
}

}  // namespace areamatch
