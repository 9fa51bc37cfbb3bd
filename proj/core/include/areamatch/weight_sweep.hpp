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

#ifndef AREAMATCH_WEIGHT_SWEEP_HPP_
#define AREAMATCH_WEIGHT_SWEEP_HPP_

#include <span>
#include <utility>
#include <vector>

#include "areamatch/area_graph.hpp"
#include "areamatch/config.hpp"

namespace areamatch {

struct SweepPoint {
  double wa = 0.0;
  double wp = 0.0;
  double wl = 0.0;
  double correctness = 0.0;  // fraction of ground-truth pairs in the best cluster
};

// Enumerates every weight triple on the unit-sum lattice with the given step
// (0.01 yields 5151 points) and records, for each, the share of ground-truth
// id pairs present in the best rotation cluster. Lattice points where the
// pipeline finds no hypotheses score 0. `jobs` > 1 evaluates points in
// parallel; the output order is independent of it.
std::vector<SweepPoint> weight_sweep(const AreaGraph& a, const AreaGraph& b,
                                     std::span<const std::pair<int, int>> gt_pairs,
                                     double step, const MatchConfig& config, int jobs = 1);

}  // namespace areamatch

#endif  // AREAMATCH_WEIGHT_SWEEP_HPP_
