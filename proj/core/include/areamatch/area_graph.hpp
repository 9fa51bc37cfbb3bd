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

#ifndef AREAMATCH_AREA_GRAPH_HPP_
#define AREAMATCH_AREA_GRAPH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "areamatch/features.hpp"
#include "areamatch/geometry.hpp"

namespace areamatch {

// One bounded free-space region. Passage points sit on (or within 0.5 m of)
// the polygon boundary and are kept sorted by (x, y).
struct Area {
  int id = 0;
  Polygon2 polygon;
  std::vector<Point2> passages;
  std::optional<FeatureSet> features;
};

// Two areas connected through a shared passage point.
struct AdjacencyEdge {
  int area_a = 0;
  int area_b = 0;
  Point2 passage;
};

struct AreaGraph {
  std::vector<Area> areas;             // sorted by ascending id
  std::vector<AdjacencyEdge> adjacency;
  double resolution = 0.0;             // m/cell of the source grid
  std::optional<std::string> source_map;

  const Area* find(int id) const;
};

// The area's passage points in deterministic (x, then y) order.
std::vector<Point2> passages_of(const Area& a);

}  // namespace areamatch

#endif  // AREAMATCH_AREA_GRAPH_HPP_
