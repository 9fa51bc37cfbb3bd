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

#ifndef AREAMATCH_EVALUATION_HPP_
#define AREAMATCH_EVALUATION_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "areamatch/config.hpp"
#include "areamatch/grid_map.hpp"
#include "areamatch/transform_estimation.hpp"

namespace areamatch {

struct EvalReport {
  double rotation_error_deg = 0.0;
  double translation_error_m = 0.0;
  bool success = false;
  double tol_deg = 3.0;
  double tol_m = 0.0;
};

// Compares an estimated A->B transform against the expected one. The
// rotation error is the circular distance between the angles; the
// translation error is the distance between the two images of `reference`
// (pass the map centroid to avoid lever-arm inflation).
EvalReport evaluate(const RigidTransform2D& result, const RigidTransform2D& expected,
                    double tol_deg, double tol_m, Point2 reference = {});
EvalReport evaluate(const MatchResult& result, const RigidTransform2D& expected, double tol_deg,
                    double tol_m, Point2 reference = {});

// Center of mass of the free cells; grid center when none are free.
Point2 free_space_centroid(const GridMap& g);

// One benchmark input: a map pair plus, when known, the expected A->B
// transform used to score correctness.
struct BenchInput {
  std::string name;
  GridMap a;
  GridMap b;
  std::optional<RigidTransform2D> expected;
};

struct BenchRow {
  std::string name;
  double segmentation_s = 0.0;
  double matching_s = 0.0;   // mean over repeats
  double total_s = 0.0;
  double correctness_pct = -1.0;  // negative when no ground truth was given
};

struct BenchTable {
  std::vector<BenchRow> rows;
  BenchRow average;
};

// Runs the matcher `repeats` times per pair (seeds config.seed, +1, ...),
// recording phase timings and the share of repeats within tolerance.
// Segmentation runs once per pair; matching repeats re-run from the
// segmented graphs, mirroring how run-to-run variability arises.
BenchTable bench(std::span<const BenchInput> pairs, int repeats, const MatchConfig& config,
                 double tol_deg, double tol_m);

// Fixed-width text table: one column per pair plus an average column, rows
// for segmentation / matching / total time and correctness.
std::string format_bench_table(const BenchTable& table);
std::string bench_table_csv(const BenchTable& table);

}  // namespace areamatch

#endif  // AREAMATCH_EVALUATION_HPP_
