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

#include <algorithm>
#include <random>

#include "areamatch/errors.hpp"
#include "areamatch/matching.hpp"
#include "areamatch/weight_sweep.hpp"
#include "oracles.hpp"

using namespace areamatch;

namespace {

Area box_area(int id, double x0, double y0, double w, double h, std::vector<Point2> passages) {
  return Area{id, Polygon2({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}}),
              std::move(passages), std::nullopt};
}

// Five rooms of clearly distinct sizes, all with passage pairs.
AreaGraph five_rooms() {
  AreaGraph g;
  g.resolution = 0.05;
  for (int i = 0; i < 5; ++i) {
    const double w = 2.0 + 1.5 * i;
    const double h = 2.0 + 0.7 * i;
    g.areas.push_back(box_area(i, 12.0 * i, 0.0, w, h,
                               {{12.0 * i + 0.5, 0.0}, {12.0 * i + w - 0.5, 0.0}}));
  }
  return g;
}

CostMatrix from_values(std::size_t rows, std::size_t cols, std::vector<double> values) {
  CostMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.values = std::move(values);
  return m;
}

}  // namespace

TEST_CASE("WeightVector::normalized scales to unit sum and validates") {
  const WeightVector w = WeightVector::normalized(2.0, 2.0, 16.0);
  CHECK(w.area == doctest::Approx(0.1));
  CHECK(w.passage == doctest::Approx(0.1));
  CHECK(w.hull == doctest::Approx(0.8));
  CHECK_THROWS_AS(WeightVector::normalized(-1.0, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(WeightVector::normalized(0.0, 0.0, 0.0), ConfigError);
}

TEST_CASE("weighted_cost renormalizes the active weights") {
  // Hull feature unavailable: weights (0.1, 0.1, 0.8) renormalize to
  // (0.5, 0.5), giving 0.5 * 0.3 + 0.5 * 0.1 = 0.2.
  FeatureCostVector v;
  v.area_cost = 0.3;
  v.passage_cost = 0.1;
  CHECK(weighted_cost(v, {0.1, 0.1, 0.8}) == doctest::Approx(0.2).epsilon(1e-12));

  // All active weights zero: fall back to the mean of available costs.
  CHECK(weighted_cost(v, {0.0, 0.0, 1.0}) == doctest::Approx(0.2).epsilon(1e-12));

  FeatureCostVector h;
  h.area_cost = 0.4;
  h.hull_cost = 0.2;
  CHECK(weighted_cost(h, {0.1, 0.1, 0.8}) ==
        doctest::Approx((0.1 * 0.4 + 0.8 * 0.2) / 0.9).epsilon(1e-12));
}

TEST_CASE("cost_matrix: identical graphs have a zero diagonal") {
  const AreaGraph g = five_rooms();
  const CostMatrix m = cost_matrix(g, g, WeightVector{});
  for (std::size_t i = 0; i < m.rows; ++i) {
    CHECK(m.at(i, i) == 0.0);
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j != i) CHECK(m.at(i, j) > 0.0);
    }
  }
}

TEST_CASE("cost_matrix equals the transpose of the swapped call") {
  AreaGraph a = five_rooms();
  AreaGraph b = five_rooms();
  // Perturb B so the matrix is not symmetric by construction.
  b.areas[1].polygon = Polygon2({{12, 0}, {16.2, 0}, {16.2, 3.1}, {12, 3.1}});
  const WeightVector w{0.2, 0.3, 0.5};
  const CostMatrix ab = cost_matrix(a, b, w);
  const CostMatrix ba = cost_matrix(b, a, w);
  REQUIRE(ab.rows == ba.cols);
  for (std::size_t i = 0; i < ab.rows; ++i) {
    for (std::size_t j = 0; j < ab.cols; ++j) {
      CHECK(ab.at(i, j) == ba.at(j, i));
    }
  }
}

TEST_CASE("cost_matrix rejects empty graphs") {
  const AreaGraph empty;
  CHECK_THROWS_AS(cost_matrix(empty, five_rooms(), WeightVector{}), EmptyGraphError);
}

TEST_CASE("mutual_knn_indices: identity pairs on identical graphs at k=1") {
  const AreaGraph g = five_rooms();
  const CostMatrix m = cost_matrix(g, g, WeightVector{});
  const auto pairs = mutual_knn_indices(m, 1);
  REQUIRE(pairs.size() == 5);
  for (const IndexPair& p : pairs) CHECK(p.row == p.col);
}

TEST_CASE("mutual_knn_indices saturates to the full Cartesian set") {
  std::mt19937_64 rng(55);
  std::vector<double> vals(5 * 3);
  for (double& v : vals) v = oracles::unit(rng);
  const CostMatrix m = from_values(5, 3, vals);
  CHECK(mutual_knn_indices(m, 5).size() == 15);
}

TEST_CASE("mutual_knn_indices matches the brute-force double-rank oracle") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t rows = 1 + rng() % 20;
    const std::size_t cols = 1 + rng() % 20;
    std::vector<double> vals(rows * cols);
    for (double& v : vals) v = oracles::unit(rng);
    // Occasionally inject exact ties to exercise the tie-break rule.
    if (rep % 4 == 0 && vals.size() >= 4) {
      vals[1] = vals[0];
      vals[3] = vals[2];
    }
    const CostMatrix m = from_values(rows, cols, vals);
    for (int k : {1, 2, 3, 5}) {
      const auto got = mutual_knn_indices(m, k);
      const auto expected = oracles::brute_force_mutual_knn(m, k);
      REQUIRE(got.size() == expected.size());
      for (const auto& [i, j] : expected) {
        const bool found = std::any_of(got.begin(), got.end(), [&](const IndexPair& p) {
          return p.row == i && p.col == j;
        });
        CHECK(found);
      }
      CHECK(got.size() <= static_cast<std::size_t>(k) * std::min(rows, cols));
    }
  }
}

TEST_CASE("mutual_knn_indices is symmetric under transposition") {
  std::mt19937_64 rng(88);
  std::vector<double> vals(8 * 6);
  for (double& v : vals) v = oracles::unit(rng);
  const CostMatrix m = from_values(8, 6, vals);
  CostMatrix mt = from_values(6, 8, std::vector<double>(48));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 6; ++j) mt.at(j, i) = m.at(i, j);
  }
  const auto fwd = mutual_knn_indices(m, 3);
  const auto rev = mutual_knn_indices(mt, 3);
  REQUIRE(fwd.size() == rev.size());
  for (const IndexPair& p : fwd) {
    const bool found = std::any_of(rev.begin(), rev.end(), [&](const IndexPair& q) {
      return q.row == p.col && q.col == p.row;
    });
    CHECK(found);
  }
}

TEST_CASE("mutual_knn_indices is deterministic") {
  std::mt19937_64 rng(99);
  std::vector<double> vals(12 * 12);
  for (double& v : vals) v = oracles::unit(rng);
  const CostMatrix m = from_values(12, 12, vals);
  const auto a = mutual_knn_indices(m, 3);
  const auto b = mutual_knn_indices(m, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].row == b[i].row);
    CHECK(a[i].col == b[i].col);
  }
}

TEST_CASE("mutual_knn_pairs carries the argmin feature segments") {
  AreaGraph a;
  a.resolution = 0.05;
  a.areas.push_back(box_area(0, 0, 0, 6, 4, {{1.0, 0.0}, {5.0, 0.0}}));  // pd 4
  AreaGraph b;
  b.resolution = 0.05;
  b.areas.push_back(box_area(0, 0, 0, 6, 4, {{1.2, 0.0}, {5.1, 0.0}}));  // pd 3.9

  const CostMatrix m = cost_matrix(a, b, WeightVector{});
  const auto pairs = mutual_knn_pairs(a, b, m, 1);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].kind == SegmentKind::kPassageDistance);
  CHECK(length(pairs[0].segment_a) == doctest::Approx(4.0));
  CHECK(length(pairs[0].segment_b) == doctest::Approx(3.9));

  // Single-passage counterpart falls back to the hull diameter segments.
  AreaGraph c;
  c.resolution = 0.05;
  c.areas.push_back(box_area(0, 0, 0, 6, 4, {{3.0, 0.0}}));
  const CostMatrix mc = cost_matrix(a, c, WeightVector{});
  const auto hull_pairs = mutual_knn_pairs(a, c, mc, 1);
  REQUIRE(hull_pairs.size() == 1);
  CHECK(hull_pairs[0].kind == SegmentKind::kHullLongest);
  CHECK(length(hull_pairs[0].segment_b) == doctest::Approx(std::sqrt(36.0 + 16.0)));
}

TEST_CASE("weight_sweep enumerates the simplex lattice") {
  const AreaGraph g = five_rooms();
  std::vector<std::pair<int, int>> gt;
  for (int i = 0; i < 5; ++i) gt.emplace_back(i, i);
  MatchConfig cfg;

  // step 1 -> the three corner points.
  auto corners = weight_sweep(g, g, gt, 1.0, cfg);
  CHECK(corners.size() == 3);

  // step 0.5 -> C(4, 2) = 6 points.
  auto coarse = weight_sweep(g, g, gt, 0.5, cfg);
  CHECK(coarse.size() == 6);
  double wsum = 0.0;
  for (const SweepPoint& p : coarse) {
    CHECK(p.wa + p.wp + p.wl == doctest::Approx(1.0));
    wsum += p.correctness;
  }
  // Identical maps: every lattice point matches all ground-truth pairs.
  CHECK(wsum == doctest::Approx(6.0));
}

TEST_CASE("weight_sweep is independent of the job count") {
  const AreaGraph g = five_rooms();
  std::vector<std::pair<int, int>> gt;
  for (int i = 0; i < 5; ++i) gt.emplace_back(i, i);
  MatchConfig cfg;
  const auto seq = weight_sweep(g, g, gt, 0.25, cfg, 1);
  const auto par = weight_sweep(g, g, gt, 0.25, cfg, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].wa == par[i].wa);
    CHECK(seq[i].correctness == par[i].correctness);
  }
}
