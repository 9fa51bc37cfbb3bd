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

#include <cmath>
#include <random>

#include "areamatch/area_graph.hpp"
#include "areamatch/errors.hpp"
#include "areamatch/features.hpp"
#include "oracles.hpp"

using namespace areamatch;

namespace {

Area box_area(int id, double x0, double y0, double w, double h, std::vector<Point2> passages) {
  return Area{id, Polygon2({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}}),
              std::move(passages), std::nullopt};
}

}  // namespace

TEST_CASE("extract_features: passage pair distances") {
  // 4x4 room with two passages 3 m apart on the bottom edge.
  const Area two = box_area(0, 0, 0, 4, 4, {{0.5, 0.0}, {3.5, 0.0}});
  const FeatureSet f2 = extract_features(two);
  CHECK(f2.area_size == doctest::Approx(16.0));
  REQUIRE(f2.passage_distances.size() == 1);
  CHECK(f2.passage_distances[0] == doctest::Approx(3.0));
  CHECK(f2.has_passage_distances);

  const Area one = box_area(1, 0, 0, 4, 4, {{2.0, 0.0}});
  const FeatureSet f1 = extract_features(one);
  CHECK(f1.passage_distances.empty());
  CHECK_FALSE(f1.has_passage_distances);

  const Area four = box_area(2, 0, 0, 10, 2,
                             {{1.0, 0.0}, {4.0, 0.0}, {7.0, 0.0}, {9.5, 0.0}});
  CHECK(extract_features(four).passage_distances.size() == 6);  // C(4, 2)
}

TEST_CASE("extract_features: hull diameter and pd <= ld") {
  const Area a = box_area(0, 0, 0, 3, 4, {{0.0, 0.5}, {3.0, 3.5}});
  const FeatureSet f = extract_features(a);
  CHECK(f.hull_longest == doctest::Approx(5.0));
  for (double pd : f.passage_distances) CHECK(pd <= f.hull_longest + 1e-6);
}

TEST_CASE("extract_features is order-independent in the passages") {
  const Area fwd = box_area(0, 0, 0, 6, 3, {{1.0, 0.0}, {5.0, 0.0}, {3.0, 3.0}});
  const Area rev = box_area(0, 0, 0, 6, 3, {{3.0, 3.0}, {5.0, 0.0}, {1.0, 0.0}});
  const FeatureSet ff = extract_features(fwd);
  const FeatureSet fr = extract_features(rev);
  REQUIRE(ff.passage_distances.size() == fr.passage_distances.size());
  for (std::size_t i = 0; i < ff.passage_distances.size(); ++i) {
    CHECK(ff.passage_distances[i] == fr.passage_distances[i]);
    CHECK(almost_equal(ff.passage_segments[i].a, fr.passage_segments[i].a));
    CHECK(almost_equal(ff.passage_segments[i].b, fr.passage_segments[i].b));
  }
}

TEST_CASE("area_size_cost: equal, hand-evaluated, and domain errors") {
  CHECK(area_size_cost(4.0, 4.0) == 0.0);
  CHECK(area_size_cost(4.0, 9.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(area_size_cost(9.0, 4.0) == area_size_cost(4.0, 9.0));
  CHECK_THROWS_AS(area_size_cost(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(area_size_cost(1.0, -2.0), DomainError);
}

TEST_CASE("passage_distance_cost: hand evaluation and empty inputs") {
  const std::vector<double> a{3.0, 5.0};
  const std::vector<double> b{5.5};
  // Pairs evaluate to 2.5/5.5 and 0.5/5.5; the minimum is 0.0909...
  CHECK(*passage_distance_cost(a, b) == doctest::Approx(0.5 / 5.5).epsilon(1e-12));
  CHECK(*passage_distance_cost(std::vector<double>{4.0}, std::vector<double>{4.0}) == 0.0);
  CHECK_FALSE(passage_distance_cost({}, std::vector<double>{3.0}).has_value());
  CHECK_FALSE(passage_distance_cost(std::vector<double>{3.0}, {}).has_value());
}

TEST_CASE("passage_distance_match reports the argmin pair") {
  const std::vector<double> a{2.0, 6.0, 9.0};
  const std::vector<double> b{5.9, 14.0};
  const auto m = passage_distance_match(a, b);
  REQUIRE(m.has_value());
  CHECK(m->index_a == 1);
  CHECK(m->index_b == 0);
  CHECK(m->cost == doctest::Approx(0.1 / 6.0));
}

TEST_CASE("hull_longest_cost: hand evaluation and domain errors") {
  CHECK(hull_longest_cost(5.0, 5.0) == 0.0);
  CHECK(hull_longest_cost(3.0, 4.0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(hull_longest_cost(4.0, 3.0) == hull_longest_cost(3.0, 4.0));
  CHECK_THROWS_AS(hull_longest_cost(0.0, 1.0), DomainError);
}

TEST_CASE("feature costs match direct formula evaluation on random inputs") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 1000; ++rep) {
    const double ai = oracles::uniform(rng, 0.1, 400.0);
    const double aj = oracles::uniform(rng, 0.1, 400.0);
    CHECK(std::abs(area_size_cost(ai, aj) - oracles::area_cost_reference(ai, aj)) <= 1e-12);
    CHECK(std::abs(hull_longest_cost(ai, aj) - oracles::hull_cost_reference(ai, aj)) <= 1e-12);

    std::vector<double> pa, pb;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
      pa.push_back(oracles::uniform(rng, 0.5, 30.0));
    }
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) {
      pb.push_back(oracles::uniform(rng, 0.5, 30.0));
    }
    CHECK(std::abs(*passage_distance_cost(pa, pb) -
                   oracles::passage_cost_reference(pa, pb)) <= 1e-12);
  }
}

TEST_CASE("feature costs are scale invariant") {
  std::mt19937_64 rng(202);
  for (int rep = 0; rep < 100; ++rep) {
    const double s = oracles::uniform(rng, 0.05, 20.0);
    const double ai = oracles::uniform(rng, 0.1, 100.0);
    const double aj = oracles::uniform(rng, 0.1, 100.0);
    // Areas scale with s^2, lengths with s.
    CHECK(area_size_cost(s * s * ai, s * s * aj) ==
          doctest::Approx(area_size_cost(ai, aj)).epsilon(1e-9));
    CHECK(hull_longest_cost(s * ai, s * aj) ==
          doctest::Approx(hull_longest_cost(ai, aj)).epsilon(1e-9));
    std::vector<double> pa{oracles::uniform(rng, 1, 10), oracles::uniform(rng, 1, 10)};
    std::vector<double> pb{oracles::uniform(rng, 1, 10)};
    std::vector<double> psa{s * pa[0], s * pa[1]};
    std::vector<double> psb{s * pb[0]};
    CHECK(*passage_distance_cost(psa, psb) ==
          doctest::Approx(*passage_distance_cost(pa, pb)).epsilon(1e-9));
  }
}

TEST_CASE("feature_cost_vector applies the conditional-feature rule") {
  const Area a2 = box_area(0, 0, 0, 4, 4, {{1.0, 0.0}, {3.0, 0.0}});
  const Area b2 = box_area(1, 0, 0, 5, 4, {{1.0, 0.0}, {4.0, 0.0}});
  const Area a1 = box_area(2, 0, 0, 4, 4, {{2.0, 0.0}});
  const Area b3 = box_area(3, 0, 0, 6, 4, {{1.0, 0.0}, {3.0, 0.0}, {5.0, 0.0}});

  const FeatureSet fa2 = extract_features(a2);
  const FeatureSet fb2 = extract_features(b2);
  const FeatureSet fa1 = extract_features(a1);
  const FeatureSet fb3 = extract_features(b3);

  const FeatureCostVector both = feature_cost_vector(fa2, fb2);
  CHECK(both.passage_cost.has_value());
  CHECK_FALSE(both.hull_cost.has_value());

  const FeatureCostVector mixed = feature_cost_vector(fa1, fb3);
  CHECK_FALSE(mixed.passage_cost.has_value());
  CHECK(mixed.hull_cost.has_value());

  const FeatureCostVector self = feature_cost_vector(fa2, fa2);
  CHECK(self.area_cost == 0.0);
  CHECK(*self.passage_cost == 0.0);
}

TEST_CASE("features are invariant under rigid transforms of the area") {
  std::mt19937_64 rng(303);
  for (int rep = 0; rep < 25; ++rep) {
    const Area a = box_area(0, oracles::uniform(rng, -5, 5), oracles::uniform(rng, -5, 5),
                            oracles::uniform(rng, 2, 8), oracles::uniform(rng, 2, 8),
                            {{0, 0}, {1, 0}});
    // Passages must ride along with the polygon.
    Area moved = a;
    const RigidTransform2D t{oracles::uniform(rng, -3, 3),
                             {oracles::uniform(rng, -9, 9), oracles::uniform(rng, -9, 9)}};
    moved.polygon = apply_rigid(t, a.polygon);
    moved.passages.clear();
    for (const Point2& p : a.passages) moved.passages.push_back(apply_rigid(t, p));

    const FeatureSet fa = extract_features(a);
    const FeatureSet fm = extract_features(moved);
    CHECK(fm.area_size == doctest::Approx(fa.area_size).epsilon(1e-6));
    CHECK(fm.hull_longest == doctest::Approx(fa.hull_longest).epsilon(1e-6));
    REQUIRE(fm.passage_distances.size() == fa.passage_distances.size());
    for (std::size_t i = 0; i < fa.passage_distances.size(); ++i) {
      CHECK(fm.passage_distances[i] == doctest::Approx(fa.passage_distances[i]).epsilon(1e-6));
    }
  }
}
