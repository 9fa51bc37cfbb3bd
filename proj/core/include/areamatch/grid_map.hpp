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

#ifndef AREAMATCH_GRID_MAP_HPP_
#define AREAMATCH_GRID_MAP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "areamatch/geometry.hpp"

namespace areamatch {

enum class Occupancy : std::uint8_t { kFree, kOccupied, kUnknown };

struct CellIndex {
  int row = 0;
  int col = 0;
};

// Occupancy grid in a y-up world frame: row 0 is the bottom row, so cell
// (r, c) has its center at origin + ((c + 0.5) * res, (r + 0.5) * res).
// Image loaders flip their top-down rows into this convention once.
class GridMap {
 public:
  GridMap(int width, int height, double resolution, Point2 origin = {},
          Occupancy fill = Occupancy::kUnknown);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  Point2 origin() const { return origin_; }

  Occupancy at(int row, int col) const { return cells_[index(row, col)]; }
  void set(int row, int col, Occupancy v) { cells_[index(row, col)] = v; }
  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height_ && col >= 0 && col < width_;
  }

  Point2 cell_center(int row, int col) const {
    return {origin_.x + (col + 0.5) * resolution_, origin_.y + (row + 0.5) * resolution_};
  }
  std::optional<CellIndex> world_to_cell(Point2 p) const;

  std::size_t count(Occupancy v) const;
  const std::vector<Occupancy>& cells() const { return cells_; }
  std::vector<Occupancy>& cells() { return cells_; }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_;
  int height_;
  double resolution_;
  Point2 origin_;
  std::vector<Occupancy> cells_;
};

}  // namespace areamatch

#endif  // AREAMATCH_GRID_MAP_HPP_
