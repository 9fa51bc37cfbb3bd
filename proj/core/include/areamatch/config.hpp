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

#ifndef AREAMATCH_CONFIG_HPP_
#define AREAMATCH_CONFIG_HPP_

#include <cstdint>
#include <optional>

#include "areamatch/geometry.hpp"
#include "areamatch/matching.hpp"

namespace areamatch {

// Pipeline parameters with their documented defaults.
struct MatchConfig {
  double width_param = 1.8;                    // segmentation width (m)
  int k = 3;                                   // mutual k-NN depth
  WeightVector weights;                        // (0.1, 0.1, 0.8)
  double angle_threshold = deg_to_rad(3.0);    // rotation cluster radius
  double overlap_threshold = 0.7;              // hypothesis verification OP
  int max_cluster_passes = 20;
  // When set, permutes the hypothesis list before clustering; the greedy
  // pass is order-dependent, so different seeds explore different starts.
  std::optional<std::uint64_t> seed;
  // Score only the best cluster's own pairs instead of every verified pair.
  bool score_cluster_pairs_only = false;
};

}  // namespace areamatch

#endif  // AREAMATCH_CONFIG_HPP_
