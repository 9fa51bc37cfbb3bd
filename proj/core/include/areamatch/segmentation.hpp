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

#ifndef AREAMATCH_SEGMENTATION_HPP_
#define AREAMATCH_SEGMENTATION_HPP_

#include "areamatch/area_graph.hpp"
#include "areamatch/grid_map.hpp"

namespace areamatch {

// Partitions free space into areas with passages. Free regions whose
// clearance from obstacles exceeds width_param / 2 seed a watershed flood;
// region boundaries are traced, simplified (Douglas-Peucker, one cell) and
// adjacent regions receive one shared passage point at the midpoint of their
// narrowest boundary gap. Regions under 1 m^2 merge into their largest
// neighbor. Deterministic for identical inputs.
//
// Throws EmptyMapError when the grid has no free cell. A result with a
// single area is valid (the caller may warn); matching then relies on hull
// features alone.
AreaGraph segment_grid_map(const GridMap& g, double width_param);

}  // namespace areamatch

#endif  // AREAMATCH_SEGMENTATION_HPP_
