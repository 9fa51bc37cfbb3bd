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

#ifndef AREAMATCH_SYNTHETIC_HPP_
#define AREAMATCH_SYNTHETIC_HPP_

#include <cstdint>

#include "areamatch/geometry.hpp"
#include "areamatch/grid_map.hpp"

namespace areamatch {

// Seeded floorplan generator: one horizontal corridor with a row of rooms on
// each side (rooms_y = 1 keeps just the top row). Room sizes and door
// positions jitter with the seed so areas stay distinguishable.
struct SyntheticSpec {
  int rooms_x = 4;              // rooms per row
  int rooms_y = 2;              // 1 or 2 rows flanking the corridor
  double room_width = 10.0;     // base room width (m), jittered
  double room_depth = 4.2;      // base room depth (m), jittered
  double corridor_width = 2.5;  // m
  double door_width = 1.0;      // m
  double wall_thickness = 0.3;  // m
  double resolution = 0.1;      // m/cell
  double margin = 1.0;          // unknown border around the building (m)
  // Fractional width variation between rooms. Wide spread keeps the room
  // features distinguishable (self-similar maps make the correspondence
  // ambiguous), while depths vary only a quarter as much so every room
  // stays elongated: near-square rooms make the hull-diameter rotation
  // genuinely ambiguous.
  double size_jitter = 0.25;
  double second_door_prob = 0.5;

  // Maps map-B coordinates into map A's frame ("map A is map B moved by gt").
  RigidTransform2D gt;

  struct Noise {
    double dropout = 0.0;  // fraction of occupied cells cleared, map A only
    double speckle = 0.0;  // fraction of free cells turned occupied, map A only
  } noise;

  std::uint64_t seed = 1;
};

struct SyntheticPair {
  GridMap a;
  GridMap b;
  RigidTransform2D gt;  // B -> A, exactly as specified
};

// Renders map B axis-aligned and map A through gt on its own canvas, then
// applies noise to A. Deterministic for a fixed spec. Throws ConfigError
// when the layout has fewer than 2 rooms.
SyntheticPair generate_synthetic_pair(const SyntheticSpec& spec);

}  // namespace areamatch

#endif  // AREAMATCH_SYNTHETIC_HPP_
