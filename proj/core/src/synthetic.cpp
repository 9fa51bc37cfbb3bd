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

#include "areamatch/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "areamatch/errors.hpp"

namespace areamatch {
namespace {

// Deterministic uniform draw in [0, 1); the standard distributions are
// implementation-defined, which would break byte-identical outputs.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * next_unit(rng);
}

struct Rect {
  double x0, y0, x1, y1;
  bool contains(Point2 p) const { return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1; }
};

// Vector floorplan in layout coordinates: the free space is the union of
// room and corridor rectangles plus door rectangles cut through the walls.
struct Layout {
  std::vector<Rect> free_rects;
  Rect outline;  // everything inside is wall unless covered by a free rect

  Occupancy classify(Point2 p) const {
    for (const Rect& r : free_rects) {
      if (r.contains(p)) return Occupancy::kFree;
    }
    if (outline.contains(p)) return Occupancy::kOccupied;
    return Occupancy::kUnknown;
  }
};

Layout build_layout(const SyntheticSpec& spec, std::mt19937_64& rng) {
  const double wall = spec.wall_thickness;
  Layout layout;

  // Jittered room widths for each row; the corridor spans the longer row.
  const int rows = std::clamp(spec.rooms_y, 1, 2);
  std::vector<std::vector<double>> widths(rows);
  std::vector<std::vector<double>> depths(rows);
  for (int row = 0; row < rows; ++row) {
    for (int i = 0; i < spec.rooms_x; ++i) {
      widths[row].push_back(spec.room_width *
                            uniform(rng, 1.0 - spec.size_jitter, 1.0 + spec.size_jitter));
      depths[row].push_back(spec.room_depth *
                            uniform(rng, 1.0 - spec.size_jitter / 4, 1.0 + spec.size_jitter / 4));
    }
  }
  auto row_span = [&](int row) {
    double s = wall;
    for (double w : widths[row]) s += w + wall;
    return s;
  };
  double span = row_span(0);
  for (int row = 1; row < rows; ++row) span = std::max(span, row_span(row));

  const double top_depth = *std::max_element(depths[0].begin(), depths[0].end());
  const double bottom_depth =
      rows == 2 ? *std::max_element(depths[1].begin(), depths[1].end()) : 0.0;

  // Vertical layout, bottom to top: wall, bottom rooms, wall, corridor,
  // wall, top rooms, wall.
  const double corridor_y0 = wall + (rows == 2 ? bottom_depth + wall : 0.0);
  const double corridor_y1 = corridor_y0 + spec.corridor_width;
  const double top_y0 = corridor_y1 + wall;

  layout.outline = {0.0, 0.0, span, top_y0 + top_depth + wall};
  layout.free_rects.push_back({wall, corridor_y0, span - wall, corridor_y1});  // corridor

  for (int row = 0; row < rows; ++row) {
    double x = wall;
    for (int i = 0; i < spec.rooms_x; ++i) {
      const double w = widths[row][i];
      const double d = depths[row][i];
      Rect room;
      if (row == 0) {
        room = {x, top_y0, x + w, top_y0 + d};
      } else {
        room = {x, corridor_y0 - wall - d, x + w, corridor_y0 - wall};
      }
      layout.free_rects.push_back(room);

      // Doors connect the room to the corridor through the shared wall.
      const int n_doors = 1 + (next_unit(rng) < spec.second_door_prob ? 1 : 0);
      for (int dix = 0; dix < n_doors; ++dix) {
        const double lo = x + 0.4;
        const double hi = x + w - 0.4 - spec.door_width;
        if (hi <= lo) continue;
        double dx;
        if (n_doors == 1) {
          dx = uniform(rng, lo, hi);
        } else {
          // Spread two doors over separate halves so they stay apart.
          const double mid = 0.5 * (lo + hi);
          dx = dix == 0 ? uniform(rng, lo, std::max(lo, mid - spec.door_width))
                        : uniform(rng, mid, hi);
        }
        Rect door;
        if (row == 0) {
          door = {dx, corridor_y1 - 0.01, dx + spec.door_width, top_y0 + 0.01};
        } else {
          door = {dx, corridor_y0 - wall - 0.01, dx + spec.door_width, corridor_y0 + 0.01};
        }
        layout.free_rects.push_back(door);
      }
      x += w + wall;
    }
  }
  return layout;
}

GridMap rasterize(const Layout& layout, const RigidTransform2D& map_to_layout, double resolution,
                  double margin, Point2 origin) {
  // Canvas covers the transformed outline plus the margin.
  const Rect& o = layout.outline;
  const Point2 corners[4] = {{o.x0, o.y0}, {o.x1, o.y0}, {o.x0, o.y1}, {o.x1, o.y1}};
  const RigidTransform2D layout_to_map = map_to_layout.inverse();
  constexpr double inf = std::numeric_limits<double>::infinity();
  double lo_x = inf, lo_y = inf, hi_x = -inf, hi_y = -inf;
  for (const Point2& c : corners) {
    const Point2 p = apply_rigid(layout_to_map, c);
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  const int width = static_cast<int>(std::ceil((hi_x - lo_x + 2 * margin) / resolution));
  const int height = static_cast<int>(std::ceil((hi_y - lo_y + 2 * margin) / resolution));

  GridMap g(width, height, resolution, origin + Point2{lo_x - margin, lo_y - margin});
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const Point2 p = apply_rigid(map_to_layout, g.cell_center(r, c) - origin);
      g.set(r, c, layout.classify(p));
    }
  }
  return g;
}

}  // namespace

SyntheticPair generate_synthetic_pair(const SyntheticSpec& spec) {
  const int rows = std::clamp(spec.rooms_y, 1, 2);
  if (spec.rooms_x * rows < 2) throw ConfigError("synthetic layout needs at least 2 rooms");
  if (!(spec.resolution > 0) || !(spec.room_width > 0) || !(spec.room_depth > 0) ||
      !(spec.corridor_width > 0) || !(spec.door_width > 0) || !(spec.wall_thickness > 0)) {
    throw ConfigError("synthetic dimensions must be positive");
  }
  if (spec.noise.dropout < 0 || spec.noise.dropout >= 1 || spec.noise.speckle < 0 ||
      spec.noise.speckle >= 1) {
    throw ConfigError("noise fractions must lie in [0, 1)");
  }

  std::mt19937_64 rng(spec.seed);
  const Layout layout = build_layout(spec, rng);

  // Map B is the layout itself; map A sees the layout through gt (gt maps
  // B-frame points into A's frame, so A-frame -> layout goes through gt^-1).
  GridMap b = rasterize(layout, RigidTransform2D::identity(), spec.resolution, spec.margin, {});
  GridMap a = rasterize(layout, spec.gt.inverse(), spec.resolution, spec.margin, {});

  // Noise applies to map A only.
  std::mt19937_64 noise_rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  if (spec.noise.dropout > 0 || spec.noise.speckle > 0) {
    for (auto& cell : a.cells()) {
      if (cell == Occupancy::kOccupied && spec.noise.dropout > 0) {
        if (next_unit(noise_rng) < spec.noise.dropout) cell = Occupancy::kFree;
      } else if (cell == Occupancy::kFree && spec.noise.speckle > 0) {
        if (next_unit(noise_rng) < spec.noise.speckle) cell = Occupancy::kOccupied;
      }
    }
  }
  return {std::move(a), std::move(b), spec.gt};
}

}  // namespace areamatch
