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

#include "areamatch/grid_map.hpp"

#include <algorithm>
#include <cmath>

#include "areamatch/errors.hpp"

namespace areamatch {

GridMap::GridMap(int width, int height, double resolution, Point2 origin, Occupancy fill)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_(origin),
      cells_(static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0), fill) {
  if (width <= 0 || height <= 0) throw ConfigError("grid dimensions must be positive");
  if (!(resolution > 0.0)) throw ConfigError("grid resolution must be positive");
}

std::optional<CellIndex> GridMap::world_to_cell(Point2 p) const {
  const int col = static_cast<int>(std::floor((p.x - origin_.x) / resolution_));
  const int row = static_cast<int>(std::floor((p.y - origin_.y) / resolution_));
  if (!in_bounds(row, col)) return std::nullopt;
  return CellIndex{row, col};
}

std::size_t GridMap::count(Occupancy v) const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), v));
}

}  // namespace areamatch
