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

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "areamatch/errors.hpp"
#include "areamatch/evaluation.hpp"
#include "areamatch/synthetic.hpp"
#include "oracles.hpp"

using namespace areamatch;

TEST_CASE("generate_synthetic_pair: identity transform, no noise") {
  SyntheticSpec spec;
  spec.seed = 9;
  const SyntheticPair p = generate_synthetic_pair(spec);
  REQUIRE(p.a.width() == p.b.width());
  REQUIRE(p.a.height() == p.b.height());
  std::size_t occupied = 0, agree = 0;
  for (int r = 0; r < p.a.height(); ++r) {
    for (int c = 0; c < p.a.width(); ++c) {
      if (p.b.at(r, c) == Occupancy::kOccupied) {
        ++occupied;
        if (p.a.at(r, c) == Occupancy::kOccupied) ++agree;
      }
    }
  }
  REQUIRE(occupied > 0);
  CHECK(static_cast<double>(agree) / occupied >= 0.99);
}

TEST_CASE("generate_synthetic_pair: 90 degree rotation swaps the bounding box") {
  SyntheticSpec spec;
  spec.seed = 10;
  spec.gt = {deg_to_rad(90.0), {0, 0}};
  const SyntheticPair p = generate_synthetic_pair(spec);
  // The building is much wider than tall, so the rotated canvas flips.
  CHECK(p.b.width() > p.b.height());
  CHECK(p.a.height() > p.a.width());
  const int dw = std::abs(p.a.height() - p.b.width());
  CHECK(dw <= 2);  // margin rounding
}

TEST_CASE("generate_synthetic_pair is deterministic per seed") {
  SyntheticSpec spec;
  spec.seed = 11;
  spec.noise.dropout = 0.03;
  spec.gt = {0.4, {1, 2}};
  const SyntheticPair p1 = generate_synthetic_pair(spec);
  const SyntheticPair p2 = generate_synthetic_pair(spec);
  REQUIRE(p1.a.cells().size() == p2.a.cells().size());
  CHECK(p1.a.cells() == p2.a.cells());
  CHECK(p1.b.cells() == p2.b.cells());

  spec.seed = 12;
  const SyntheticPair p3 = generate_synthetic_pair(spec);
  CHECK(p1.a.cells() != p3.a.cells());
}

TEST_CASE("generate_synthetic_pair validates its spec") {
  SyntheticSpec spec;
  spec.rooms_x = 1;
  spec.rooms_y = 1;
  CHECK_THROWS_AS(generate_synthetic_pair(spec), ConfigError);
  SyntheticSpec bad;
  bad.noise.dropout = 1.5;
  CHECK_THROWS_AS(generate_synthetic_pair(bad), ConfigError);
}

TEST_CASE("evaluate: exact, opposite, and near-tolerance results") {
  const RigidTransform2D gt{deg_to_rad(30.0), {1.0, -2.0}};
  const EvalReport exact = evaluate(gt, gt, 3.0, 0.2, {5, 5});
  CHECK(exact.rotation_error_deg == 0.0);
  CHECK(exact.translation_error_m == 0.0);
  CHECK(exact.success);

  RigidTransform2D flipped = gt;
  flipped.theta = normalize_angle(gt.theta + std::numbers::pi);
  const EvalReport opposite = evaluate(flipped, gt, 3.0, 0.2, {5, 5});
  CHECK(opposite.rotation_error_deg == doctest::Approx(180.0));
  CHECK_FALSE(opposite.success);

  RigidTransform2D close = gt;
  close.theta = deg_to_rad(31.5);
  const EvalReport near = evaluate(close, gt, 3.0, 10.0, {0, 0});
  CHECK(near.rotation_error_deg == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(near.success);
}

TEST_CASE("evaluate: success is monotone in the tolerances") {
  const RigidTransform2D gt{deg_to_rad(10.0), {0.5, 0.5}};
  RigidTransform2D res{deg_to_rad(12.0), {0.6, 0.4}};
  const EvalReport tight = evaluate(res, gt, 1.0, 0.05, {1, 1});
  const EvalReport loose = evaluate(res, gt, 5.0, 1.0, {1, 1});
  CHECK_FALSE(tight.success);
  CHECK(loose.success);
}

TEST_CASE("evaluate is invariant under composing both transforms") {
  std::mt19937_64 rng(606);
  for (int rep = 0; rep < 30; ++rep) {
    const RigidTransform2D gt{oracles::uniform(rng, -3, 3),
                              {oracles::uniform(rng, -5, 5), oracles::uniform(rng, -5, 5)}};
    const RigidTransform2D res{oracles::uniform(rng, -3, 3),
                               {oracles::uniform(rng, -5, 5), oracles::uniform(rng, -5, 5)}};
    const RigidTransform2D extra{oracles::uniform(rng, -3, 3),
                                 {oracles::uniform(rng, -5, 5), oracles::uniform(rng, -5, 5)}};
    const Point2 ref{oracles::uniform(rng, -5, 5), oracles::uniform(rng, -5, 5)};
    const EvalReport base = evaluate(res, gt, 3.0, 0.5, ref);
    const EvalReport moved = evaluate(compose(extra, res), compose(extra, gt), 3.0, 0.5, ref);
    CHECK(moved.rotation_error_deg == doctest::Approx(base.rotation_error_deg).epsilon(1e-9));
    CHECK(moved.translation_error_m == doctest::Approx(base.translation_error_m).epsilon(1e-6));
  }
}

TEST_CASE("free_space_centroid averages the free cells") {
  GridMap g(10, 10, 1.0, {}, Occupancy::kOccupied);
  g.set(0, 0, Occupancy::kFree);
  g.set(0, 9, Occupancy::kFree);
  const Point2 c = free_space_centroid(g);
  CHECK(c.x == doctest::Approx(5.0));
  CHECK(c.y == doctest::Approx(0.5));
}

TEST_CASE("bench: one pair, one repeat, Table-shaped output") {
  SyntheticSpec spec;
  spec.rooms_x = 3;
  spec.seed = 21;
  SyntheticPair p = generate_synthetic_pair(spec);

  std::vector<BenchInput> inputs;
  inputs.push_back({"pair0", std::move(p.a), std::move(p.b), p.gt.inverse()});
  MatchConfig cfg;
  const BenchTable table = bench(inputs, 1, cfg, 3.0, 0.2);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].name == "pair0");
  CHECK(table.rows[0].segmentation_s > 0.0);
  // Total at least covers the measured phases (I/O remainder allowed).
  CHECK(table.rows[0].total_s >=
        table.rows[0].segmentation_s + table.rows[0].matching_s - 1e-12);
  CHECK(table.rows[0].correctness_pct >= 0.0);
  CHECK(table.average.segmentation_s == doctest::Approx(table.rows[0].segmentation_s));

  const std::string text = format_bench_table(table);
  CHECK(text.find("Segmentation Time (s)") != std::string::npos);
  CHECK(text.find("Matching Time (s)") != std::string::npos);
  CHECK(text.find("Total Time (s)") != std::string::npos);
  CHECK(text.find("Correctness (%)") != std::string::npos);
  CHECK(text.find("Average") != std::string::npos);

  const std::string csv = bench_table_csv(table);
  CHECK(csv.find("pair,segmentation_s,matching_s,total_s,correctness_pct") == 0);
}

TEST_CASE("bench: correctness over repeats reflects tolerance") {
  SyntheticSpec spec;
  spec.rooms_x = 3;
  spec.seed = 22;
  spec.gt = {deg_to_rad(25.0), {2.0, 1.0}};
  SyntheticPair p = generate_synthetic_pair(spec);

  std::vector<BenchInput> inputs;
  inputs.push_back({"rot25", p.a, p.b, p.gt.inverse()});
  MatchConfig cfg;
  cfg.seed = 100;
  const BenchTable table = bench(inputs, 5, cfg, 3.0, 0.2);
  CHECK(table.rows[0].correctness_pct >= 80.0);

  // An impossible tolerance forces zero correctness.
  const BenchTable none = bench(inputs, 2, cfg, 0.0, 0.0);
  CHECK(none.rows[0].correctness_pct == 0.0);

  CHECK_THROWS_AS(bench({}, 1, cfg, 3.0, 0.2), ConfigError);
  CHECK_THROWS_AS(bench(inputs, 0, cfg, 3.0, 0.2), ConfigError);
}
