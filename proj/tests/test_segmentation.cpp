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

#include "areamatch/errors.hpp"
#include "areamatch/segmentation.hpp"
#include "areamatch/synthetic.hpp"

using namespace areamatch;

namespace {

void carve_free(GridMap& g, double x0, double y0, double x1, double y1) {
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      const Point2 p = g.cell_center(r, c);
      if (p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1) g.set(r, c, Occupancy::kFree);
    }
  }
}

// Two 5 m x 5 m rooms joined by a 1 m wide, 1 m long door corridor.
GridMap two_rooms(double res = 0.05, Point2 origin = {}) {
  const int w = static_cast<int>(std::lround(11.5 / res));
  const int h = static_cast<int>(std::lround(5.5 / res));
  GridMap g(w, h, res, origin, Occupancy::kOccupied);
  carve_free(g, origin.x + 0.25, origin.y + 0.25, origin.x + 5.25, origin.y + 5.25);
  carve_free(g, origin.x + 6.25, origin.y + 0.25, origin.x + 11.25, origin.y + 5.25);
  carve_free(g, origin.x + 5.25, origin.y + 2.0, origin.x + 6.25, origin.y + 3.0);  // door
  return g;
}

double total_area(const AreaGraph& g) {
  double sum = 0.0;
  for (const Area& a : g.areas) sum += polygon_area(a.polygon);
  return sum;
}

bool graphs_identical(const AreaGraph& a, const AreaGraph& b) {
  if (a.areas.size() != b.areas.size()) return false;
  for (std::size_t i = 0; i < a.areas.size(); ++i) {
    if (a.areas[i].id != b.areas[i].id) return false;
    const auto& va = a.areas[i].polygon.vertices();
    const auto& vb = b.areas[i].polygon.vertices();
    if (va.size() != vb.size()) return false;
    for (std::size_t v = 0; v < va.size(); ++v) {
      if (va[v].x != vb[v].x || va[v].y != vb[v].y) return false;
    }
    if (a.areas[i].passages.size() != b.areas[i].passages.size()) return false;
    for (std::size_t v = 0; v < a.areas[i].passages.size(); ++v) {
      if (a.areas[i].passages[v].x != b.areas[i].passages[v].x ||
          a.areas[i].passages[v].y != b.areas[i].passages[v].y) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("segment_grid_map: two rooms with a narrow door") {
  const GridMap g = two_rooms();
  const AreaGraph graph = segment_grid_map(g, 1.8);

  CHECK(graph.areas.size() >= 2);
  CHECK(graph.areas.size() <= 3);
  REQUIRE(!graph.adjacency.empty());

  // At least one passage must sit in the door region.
  bool door_passage = false;
  for (const AdjacencyEdge& e : graph.adjacency) {
    if (e.passage.x > 5.0 && e.passage.x < 6.5 && e.passage.y > 1.8 && e.passage.y < 3.2) {
      door_passage = true;
    }
  }
  CHECK(door_passage);

  // Both rooms are about 25 m^2.
  int big_rooms = 0;
  for (const Area& a : graph.areas) {
    if (polygon_area(a.polygon) > 20.0) ++big_rooms;
  }
  CHECK(big_rooms == 2);
}

TEST_CASE("segment_grid_map: single empty room gives one area") {
  GridMap g(110, 110, 0.05, {}, Occupancy::kOccupied);
  carve_free(g, 0.25, 0.25, 5.25, 5.25);
  const AreaGraph graph = segment_grid_map(g, 1.8);
  REQUIRE(graph.areas.size() == 1);
  CHECK(graph.areas[0].passages.empty());
  CHECK(graph.adjacency.empty());
  CHECK(polygon_area(graph.areas[0].polygon) == doctest::Approx(25.0).epsilon(0.05));
}

TEST_CASE("segment_grid_map: no free space raises EmptyMapError") {
  GridMap g(20, 20, 0.05, {}, Occupancy::kOccupied);
  CHECK_THROWS_AS(segment_grid_map(g, 1.8), EmptyMapError);
  CHECK_THROWS_AS(segment_grid_map(two_rooms(), 0.0), ConfigError);
}

TEST_CASE("segment_grid_map is deterministic (bit-exact)") {
  const GridMap g = two_rooms();
  const AreaGraph g1 = segment_grid_map(g, 1.8);
  const AreaGraph g2 = segment_grid_map(g, 1.8);
  CHECK(graphs_identical(g1, g2));
}

TEST_CASE("segmentation commutes with whole-cell grid translation") {
  const GridMap base = two_rooms();
  // Same content embedded 13 cells right / 7 cells up on a larger canvas.
  const double res = 0.05;
  const int dc = 13, dr = 7;
  GridMap shifted(base.width() + 30, base.height() + 20, res, {}, Occupancy::kOccupied);
  for (int r = 0; r < base.height(); ++r) {
    for (int c = 0; c < base.width(); ++c) {
      shifted.set(r + dr, c + dc, base.at(r, c));
    }
  }
  const AreaGraph ga = segment_grid_map(base, 1.8);
  const AreaGraph gb = segment_grid_map(shifted, 1.8);
  REQUIRE(ga.areas.size() == gb.areas.size());
  const double ox = dc * res, oy = dr * res;
  for (std::size_t i = 0; i < ga.areas.size(); ++i) {
    const auto& va = ga.areas[i].polygon.vertices();
    const auto& vb = gb.areas[i].polygon.vertices();
    REQUIRE(va.size() == vb.size());
    for (std::size_t v = 0; v < va.size(); ++v) {
      CHECK(vb[v].x == doctest::Approx(va[v].x + ox).epsilon(1e-9));
      CHECK(vb[v].y == doctest::Approx(va[v].y + oy).epsilon(1e-9));
    }
    REQUIRE(ga.areas[i].passages.size() == gb.areas[i].passages.size());
    for (std::size_t v = 0; v < ga.areas[i].passages.size(); ++v) {
      CHECK(gb.areas[i].passages[v].x ==
            doctest::Approx(ga.areas[i].passages[v].x + ox).epsilon(1e-9));
      CHECK(gb.areas[i].passages[v].y ==
            doctest::Approx(ga.areas[i].passages[v].y + oy).epsilon(1e-9));
    }
  }
}

TEST_CASE("areas are interior-disjoint and cover the free space") {
  SyntheticSpec spec;
  spec.seed = 31;
  const SyntheticPair pair = generate_synthetic_pair(spec);
  const AreaGraph graph = segment_grid_map(pair.b, 1.8);
  REQUIRE(graph.areas.size() >= 2);

  for (std::size_t i = 0; i < graph.areas.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.areas.size(); ++j) {
      const double ai = polygon_area(graph.areas[i].polygon);
      const double aj = polygon_area(graph.areas[j].polygon);
      const double overlap = polygon_overlap_area(graph.areas[i].polygon, graph.areas[j].polygon);
      CHECK(overlap / std::min(ai, aj) < 0.01);
    }
  }

  const double cell = pair.b.resolution() * pair.b.resolution();
  const double free_area = static_cast<double>(pair.b.count(Occupancy::kFree)) * cell;
  CHECK(total_area(graph) >= 0.9 * free_area);
}

TEST_CASE("passages sit on their area boundary and are shared by neighbors") {
  const AreaGraph graph = segment_grid_map(two_rooms(), 1.8);
  for (const Area& a : graph.areas) {
    for (const Point2& p : a.passages) {
      CHECK(distance_to_boundary(a.polygon, p) <= 1e-9);
    }
  }
  for (const AdjacencyEdge& e : graph.adjacency) {
    const Area* a = graph.find(e.area_a);
    const Area* b = graph.find(e.area_b);
    REQUIRE(a);
    REQUIRE(b);
    auto near_passage = [&](const Area& area) {
      for (const Point2& p : area.passages) {
        if (distance(p, e.passage) <= 0.5) return true;
      }
      return false;
    };
    CHECK(near_passage(*a));
    CHECK(near_passage(*b));
  }
}

TEST_CASE("segmenting a synthetic floorplan finds roughly one area per room") {
  SyntheticSpec spec;
  spec.rooms_x = 5;
  spec.rooms_y = 2;
  spec.seed = 77;
  const SyntheticPair pair = generate_synthetic_pair(spec);
  const AreaGraph graph = segment_grid_map(pair.b, 1.8);
  // 10 rooms + 1 corridor, within +-30%.
  const int expected = 11;
  CHECK(graph.areas.size() >= static_cast<std::size_t>(std::floor(0.7 * expected)));
  CHECK(graph.areas.size() <= static_cast<std::size_t>(std::ceil(1.3 * expected)));
}

TEST_CASE("passages_of returns deterministic sorted order") {
  const AreaGraph graph = segment_grid_map(two_rooms(), 1.8);
  for (const Area& a : graph.areas) {
    const auto p1 = passages_of(a);
    const auto p2 = passages_of(a);
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
      CHECK(p1[i].x == p2[i].x);
      CHECK(p1[i].y == p2[i].y);
      if (i > 0) {
        const bool ordered = p1[i - 1].x < p1[i].x ||
                             (p1[i - 1].x == p1[i].x && p1[i - 1].y <= p1[i].y);
        CHECK(ordered);
      }
    }
  }
}
