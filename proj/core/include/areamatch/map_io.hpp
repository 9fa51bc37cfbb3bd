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

#ifndef AREAMATCH_MAP_IO_HPP_
#define AREAMATCH_MAP_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "areamatch/area_graph.hpp"
#include "areamatch/grid_map.hpp"

namespace areamatch {

// 8-bit grayscale raster with row 0 at the top (image convention).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major

  std::uint8_t at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
};

// Reads a PGM (P2/P5) or 8-bit grayscale PNG, dispatching on magic bytes.
// Throws IoError for unreadable files and FormatError for anything that is
// not 8-bit grayscale.
GrayImage read_gray_image(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);

// Binarizes an image into a grid map: pixel >= free_threshold is free,
// pixel <= occupied_threshold is occupied, everything else unknown. Rows are
// flipped so the world y axis points up. Throws ConfigError for a
// nonpositive resolution or inconsistent thresholds.
GridMap load_grid_map(const std::string& path, double resolution, int free_threshold = 250,
                      int occupied_threshold = 50);

// Writes the grid as a PGM using the common occupancy convention
// (free 254, occupied 0, unknown 205), which round-trips through
// load_grid_map's default thresholds.
void write_grid_map_pgm(const GridMap& g, const std::string& path);

// Area-graph interchange: a JSON document with fields `version` (=1),
// `resolution`, optional `source_map`, and `areas`, each area carrying
// `id`, `polygon` ([[x, y], ...] in meters) and `passages`. write/read
// round-trips bit-exactly. Schema violations raise FormatError with a
// JSON-pointer-style location.
AreaGraph read_area_graph(const std::string& path);
void write_area_graph(const AreaGraph& g, const std::string& path);

// RGB canvas with row 0 at the top, plus the world position of its
// bottom-left corner so cells can be located.
struct RgbImage {
  int width = 0;
  int height = 0;
  double resolution = 0.0;
  Point2 world_min;
  std::vector<std::uint8_t> pixels;  // row-major, 3 bytes per pixel
};

// Overlay of map B's occupied cells in gray under map A's occupied cells in
// red at 50% alpha, with A placed by `t`; the canvas covers both footprints
// at B's resolution.
RgbImage compose_alignment(const GridMap& a, const GridMap& b, const RigidTransform2D& t);

// compose_alignment written as a PNG.
void render_alignment(const GridMap& a, const GridMap& b, const RigidTransform2D& t,
                      const std::string& path);

}  // namespace areamatch

#endif  // AREAMATCH_MAP_IO_HPP_
