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

#include "areamatch/weight_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "areamatch/errors.hpp"
#include "areamatch/transform_estimation.hpp"

namespace areamatch {
namespace {

// Share of ground-truth id pairs that appear among the best cluster's pairs.
double correctness_for(const AreaGraph& a, const AreaGraph& b, const MatchConfig& cfg,
                       std::span<const std::pair<int, int>> gt_pairs) {
  if (gt_pairs.empty()) return 0.0;
  try {
    const CostMatrix m = cost_matrix(a, b, cfg.weights);
    const auto pairs = mutual_knn_pairs(a, b, m, cfg.k);
    std::vector<RotationHypothesis> hyps;
    for (const MatchPair& p : pairs) {
      auto hs = pair_hypotheses(p, *a.find(p.area_id_a), *b.find(p.area_id_b),
                                cfg.overlap_threshold);
      for (auto& h : hs) hyps.push_back(std::move(h));
    }
    if (hyps.empty()) return 0.0;
    const auto clusters = cluster_rotations(std::move(hyps), cfg.angle_threshold,
                                            cfg.max_cluster_passes);
    const RotationCluster& best = best_cluster(clusters);
    std::size_t hits = 0;
    for (const auto& [ga, gb] : gt_pairs) {
      const bool found = std::any_of(
          best.members.begin(), best.members.end(), [&](const RotationHypothesis& h) {
            return h.pair.area_id_a == ga && h.pair.area_id_b == gb;
          });
      if (found) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(gt_pairs.size());
  } catch (const Error&) {
    return 0.0;
  }
}

}  // namespace

std::vector<SweepPoint> weight_sweep(const AreaGraph& graph_a, const AreaGraph& graph_b,
                                     std::span<const std::pair<int, int>> gt_pairs,
                                     double step, const MatchConfig& config, int jobs) {
  if (!(step > 0.0) || step > 1.0) throw ConfigError("sweep step must lie in (0, 1]");
  const int denom = static_cast<int>(std::lround(1.0 / step));
  if (std::abs(denom * step - 1.0) > 1e-9) {
    throw ConfigError("sweep step must divide 1 evenly");
  }

  AreaGraph a = graph_a;
  AreaGraph b = graph_b;
  fill_features(a);
  fill_features(b);

  std::vector<SweepPoint> points;
  for (int i = 0; i <= denom; ++i) {
    for (int j = 0; i + j <= denom; ++j) {
      points.push_back({static_cast<double>(i) / denom, static_cast<double>(j) / denom,
                        static_cast<double>(denom - i - j) / denom, 0.0});
    }
  }

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      MatchConfig cfg = config;
      cfg.weights = {points[p].wa, points[p].wp, points[p].wl};
      points[p].correctness = correctness_for(a, b, cfg, gt_pairs);
    }
  };

  const int workers = std::max(1, jobs);
  if (workers == 1) {
    run_range(0, points.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (points.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(points.size(), w * chunk);
      const std::size_t hi = std::min(points.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return points;
}

}  // namespace areamatch
