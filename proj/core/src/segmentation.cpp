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

#include "areamatch/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <tuple>
#include <vector>

#include "areamatch/errors.hpp"

namespace areamatch {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Regions smaller than this merge into their largest neighbor (m^2).
constexpr double kTinyRegionArea = 1.0;

struct Grid {
  int width = 0;
  int height = 0;
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * width + c; }
};

// ---------------------------------------------------------------------------
// Exact Euclidean distance transform (Felzenszwalb & Huttenlocher), squared
// distances in cell units. The map border counts as an obstacle.

void dt_1d(const std::vector<double>& f, std::vector<double>& d, int n) {
  static thread_local std::vector<int> v;
  static thread_local std::vector<double> z;
  v.assign(static_cast<std::size_t>(n), 0);
  z.assign(static_cast<std::size_t>(n) + 1, 0.0);
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    while (s <= z[k]) {
      --k;
      s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

// Squared distance from every free cell to the nearest non-free cell or to
// the canvas border. Free cells start at a large finite sentinel: infinity
// would turn the parabola intersections into NaN.
std::vector<double> squared_distance_transform(const GridMap& g) {
  constexpr double kFar = 1e12;
  const int w = g.width() + 2;
  const int h = g.height() + 2;
  std::vector<double> sq(static_cast<std::size_t>(w) * h, 0.0);
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      sq[static_cast<std::size_t>(r + 1) * w + (c + 1)] =
          g.at(r, c) == Occupancy::kFree ? kFar : 0.0;
    }
  }
  std::vector<double> col(h), out_col(h);
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) col[r] = sq[static_cast<std::size_t>(r) * w + c];
    dt_1d(col, out_col, h);
    for (int r = 0; r < h; ++r) sq[static_cast<std::size_t>(r) * w + c] = out_col[r];
  }
  std::vector<double> row(w), out_row(w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) row[c] = sq[static_cast<std::size_t>(r) * w + c];
    dt_1d(row, out_row, w);
    for (int c = 0; c < w; ++c) sq[static_cast<std::size_t>(r) * w + c] = out_row[c];
  }
  std::vector<double> cropped(static_cast<std::size_t>(g.width()) * g.height());
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      cropped[static_cast<std::size_t>(r) * g.width() + c] =
          sq[static_cast<std::size_t>(r + 1) * w + (c + 1)];
    }
  }
  return cropped;
}

// ---------------------------------------------------------------------------
// Seeding and watershed

// 8-connected components of `mask`, labeled in row-major discovery order.
int label_components(const Grid& grid, const std::vector<bool>& mask, std::vector<int>& labels,
                     bool eight_connected) {
  labels.assign(mask.size(), -1);
  int next = 0;
  std::vector<std::size_t> stack;
  const int dr8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
  const int dc8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
  const int dr4[] = {-1, 0, 0, 1};
  const int dc4[] = {0, -1, 1, 0};
  const int* dr = eight_connected ? dr8 : dr4;
  const int* dc = eight_connected ? dc8 : dc4;
  const int nn = eight_connected ? 8 : 4;
  for (std::size_t start = 0; start < mask.size(); ++start) {
    if (!mask[start] || labels[start] >= 0) continue;
    labels[start] = next;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      const int r = static_cast<int>(cur) / grid.width;
      const int c = static_cast<int>(cur) % grid.width;
      for (int k = 0; k < nn; ++k) {
        const int nr = r + dr[k];
        const int nc = c + dc[k];
        if (nr < 0 || nr >= grid.height || nc < 0 || nc >= grid.width) continue;
        const std::size_t ni = grid.idx(nr, nc);
        if (mask[ni] && labels[ni] < 0) {
          labels[ni] = next;
          stack.push_back(ni);
        }
      }
    }
    ++next;
  }
  return next;
}

// Multi-source Dijkstra over free cells (8-connected): each cell takes the
// label of the geodesically nearest seed. Ties resolve to the smaller label,
// then the smaller cell index, so the flood is deterministic and commutes
// with whole-cell translations.
std::vector<int> watershed(const Grid& grid, const std::vector<bool>& free,
                           const std::vector<int>& seed_labels) {
  using Entry = std::tuple<double, int, std::size_t>;  // (dist, label, cell)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<double> dist(free.size(), kInf);
  std::vector<int> label(free.size(), -1);

  for (std::size_t i = 0; i < free.size(); ++i) {
    if (seed_labels[i] >= 0) {
      dist[i] = 0.0;
      heap.emplace(0.0, seed_labels[i], i);
    }
  }
  const int dr[] = {-1, -1, -1, 0, 0, 1, 1, 1};
  const int dc[] = {-1, 0, 1, -1, 1, -1, 0, 1};
  const double step[] = {std::numbers::sqrt2, 1.0, std::numbers::sqrt2, 1.0,
                         1.0, std::numbers::sqrt2, 1.0, std::numbers::sqrt2};
  while (!heap.empty()) {
    const auto [d, l, i] = heap.top();
    heap.pop();
    if (label[i] >= 0) continue;
    label[i] = l;
    const int r = static_cast<int>(i) / grid.width;
    const int c = static_cast<int>(i) % grid.width;
    for (int k = 0; k < 8; ++k) {
      const int nr = r + dr[k];
      const int nc = c + dc[k];
      if (nr < 0 || nr >= grid.height || nc < 0 || nc >= grid.width) continue;
      const std::size_t ni = grid.idx(nr, nc);
      if (!free[ni] || label[ni] >= 0) continue;
      const double nd = d + step[k];
      if (nd < dist[ni]) {
        dist[ni] = nd;
        heap.emplace(nd, l, ni);
      } else if (nd == dist[ni]) {
        heap.emplace(nd, l, ni);  // equal-cost path; tie broken at pop time
      }
    }
  }
  return label;
}

// Merges regions below kTinyRegionArea into their largest 4-adjacent
// neighbor (isolated ones are dropped), then compacts labels in row-major
// first-appearance order.
int merge_and_compact(const Grid& grid, std::vector<int>& labels, int count, double cell_area) {
  std::vector<int> parent(count);
  std::vector<bool> dead(static_cast<std::size_t>(count), false);
  for (int i = 0; i < count; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (;;) {
    std::vector<std::size_t> cells(static_cast<std::size_t>(count), 0);
    for (int lab : labels) {
      if (lab >= 0) ++cells[static_cast<std::size_t>(find(lab))];
    }
    // neighbor cell counts per adjacent root pair
    std::map<std::pair<int, int>, std::size_t> contact;
    for (int r = 0; r < grid.height; ++r) {
      for (int c = 0; c < grid.width; ++c) {
        const int a = labels[grid.idx(r, c)];
        if (a < 0) continue;
        const int ra = find(a);
        if (c + 1 < grid.width) {
          const int b = labels[grid.idx(r, c + 1)];
          if (b >= 0 && find(b) != ra) {
            ++contact[{std::min(ra, find(b)), std::max(ra, find(b))}];
          }
        }
        if (r + 1 < grid.height) {
          const int b = labels[grid.idx(r + 1, c)];
          if (b >= 0 && find(b) != ra) {
            ++contact[{std::min(ra, find(b)), std::max(ra, find(b))}];
          }
        }
      }
    }
    // Smallest tiny region first; merge it into its largest neighbor, or
    // drop it when nothing borders it (speckle and fringe artifacts).
    int alive = 0;
    for (int i = 0; i < count; ++i) {
      if (find(i) == i && !dead[static_cast<std::size_t>(i)] &&
          cells[static_cast<std::size_t>(i)] > 0) {
        ++alive;
      }
    }
    int tiny = -1;
    std::size_t tiny_cells = 0;
    for (int i = 0; i < count; ++i) {
      if (find(i) != i || dead[static_cast<std::size_t>(i)] ||
          cells[static_cast<std::size_t>(i)] == 0) {
        continue;
      }
      const std::size_t n = cells[static_cast<std::size_t>(i)];
      if (n * cell_area < kTinyRegionArea && (tiny < 0 || n < tiny_cells)) {
        tiny = i;
        tiny_cells = n;
      }
    }
    if (tiny < 0) break;
    int target = -1;
    std::size_t target_cells = 0;
    for (const auto& [pair, n] : contact) {
      int other = -1;
      if (pair.first == tiny) other = pair.second;
      if (pair.second == tiny) other = pair.first;
      if (other < 0 || dead[static_cast<std::size_t>(other)]) continue;
      if (cells[static_cast<std::size_t>(other)] > target_cells) {
        target = other;
        target_cells = cells[static_cast<std::size_t>(other)];
      }
    }
    if (target >= 0) {
      parent[tiny] = target;
    } else if (alive > 1) {
      dead[static_cast<std::size_t>(tiny)] = true;
    } else {
      break;  // the map's only region stays, however small
    }
  }

  // Compact to 0..n-1 in row-major first-appearance order.
  std::vector<int> remap(static_cast<std::size_t>(count), -1);
  int next = 0;
  for (int& lab : labels) {
    if (lab < 0) continue;
    const int root = find(lab);
    if (dead[static_cast<std::size_t>(root)]) {
      lab = -1;
      continue;
    }
    if (remap[static_cast<std::size_t>(root)] < 0) remap[static_cast<std::size_t>(root)] = next++;
    lab = remap[static_cast<std::size_t>(root)];
  }
  return next;
}

// ---------------------------------------------------------------------------
// Boundary tracing: walks the cracks between cells of a region and the
// outside, region kept on the left, which yields a CCW simple ring of grid
// corners. Corner (r, c) sits at world origin + (c * res, r * res).

enum Dir : int { kEast = 0, kNorth = 1, kWest = 2, kSouth = 3 };

std::vector<Point2> trace_region(const Grid& grid, const std::vector<int>& labels, int lab,
                                 std::size_t start_cell, const GridMap& g) {
  const int dr[4] = {0, 1, 0, -1};
  const int dc[4] = {1, 0, -1, 0};
  auto inside = [&](int r, int c) {
    if (r < 0 || r >= grid.height || c < 0 || c >= grid.width) return false;
    return labels[grid.idx(r, c)] == lab;
  };
  // Cells flanking an edge that starts at corner (r, c) heading `d`.
  auto left_cell = [&](int r, int c, int d, int& lr, int& lc) {
    switch (d) {
      case kEast: lr = r; lc = c; break;
      case kNorth: lr = r; lc = c - 1; break;
      case kWest: lr = r - 1; lc = c - 1; break;
      default: lr = r - 1; lc = c; break;
    }
  };
  auto right_cell = [&](int r, int c, int d, int& rr, int& rc) {
    switch (d) {
      case kEast: rr = r - 1; rc = c; break;
      case kNorth: rr = r; rc = c; break;
      case kWest: rr = r; rc = c - 1; break;
      default: rr = r - 1; rc = c - 1; break;
    }
  };
  auto walkable = [&](int r, int c, int d) {
    int lr, lc, rr, rc;
    left_cell(r, c, d, lr, lc);
    right_cell(r, c, d, rr, rc);
    return inside(lr, lc) && !inside(rr, rc);
  };

  const int r0 = static_cast<int>(start_cell) / grid.width;
  const int c0 = static_cast<int>(start_cell) % grid.width;
  // The row-major first cell has outside below, so its bottom edge heading
  // east keeps the region on the left.
  int r = r0, c = c0, d = kEast;
  const int start_r = r, start_c = c, start_d = d;

  std::vector<Point2> ring;
  do {
    r += dr[d];
    c += dc[d];
    // Left-turn priority keeps the ring simple at diagonal pinches.
    int nd = -1;
    for (int turn = 1; turn >= -2; --turn) {  // left, straight, right, back
      const int cand = (d + turn + 4) % 4;
      if (walkable(r, c, cand)) {
        nd = cand;
        break;
      }
    }
    if (nd < 0) break;  // cannot happen on a well-formed region boundary
    if (nd != d) {
      ring.push_back({g.origin().x + c * g.resolution(), g.origin().y + r * g.resolution()});
      d = nd;
    }
  } while (!(r == start_r && c == start_c && d == start_d));
  return ring;
}

// ---------------------------------------------------------------------------
// Douglas-Peucker on a closed ring (tolerance in meters).

void dp_chain(const std::vector<Point2>& pts, std::size_t lo, std::size_t hi, double tol,
              std::vector<bool>& keep) {
  if (hi <= lo + 1) return;
  const Point2 a = pts[lo];
  const Point2 b = pts[hi];
  const Point2 ab = b - a;
  const double len = norm(ab);
  double worst = -1.0;
  std::size_t worst_i = lo;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    double dist_i;
    if (len <= kPointEps) {
      dist_i = distance(pts[i], a);
    } else {
      dist_i = std::abs(cross(a, b, pts[i])) / len;
    }
    if (dist_i > worst) {
      worst = dist_i;
      worst_i = i;
    }
  }
  if (worst > tol) {
    keep[worst_i] = true;
    dp_chain(pts, lo, worst_i, tol, keep);
    dp_chain(pts, worst_i, hi, tol, keep);
  }
}

std::vector<Point2> simplify_ring(const std::vector<Point2>& ring, double tol) {
  const std::size_t n = ring.size();
  if (n <= 4) return ring;
  // Anchor at the lexicographically smallest vertex and the vertex farthest
  // from it, then simplify the two open chains.
  std::size_t a0 = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (ring[i].x < ring[a0].x || (ring[i].x == ring[a0].x && ring[i].y < ring[a0].y)) a0 = i;
  }
  std::size_t a1 = a0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = distance(ring[a0], ring[i]);
    if (d > best) {
      best = d;
      a1 = i;
    }
  }
  if (a1 == a0) return ring;

  std::vector<Point2> rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = ring[(a0 + i) % n];
  const std::size_t split = (a1 + n - a0) % n;

  std::vector<bool> keep(n, false);
  keep[0] = keep[split] = true;
  dp_chain(rot, 0, split, tol, keep);
  // Closing chain wraps around; append the anchor copy for the recursion.
  std::vector<Point2> tail(rot.begin() + static_cast<std::ptrdiff_t>(split), rot.end());
  tail.push_back(rot[0]);
  std::vector<bool> keep_tail(tail.size(), false);
  keep_tail.front() = keep_tail.back() = true;
  dp_chain(tail, 0, tail.size() - 1, tol, keep_tail);
  for (std::size_t i = 1; i + 1 < tail.size(); ++i) {
    if (keep_tail[i]) keep[split + i] = true;
  }

  std::vector<Point2> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) out.push_back(rot[i]);
  }
  return out;
}

}  // namespace

AreaGraph segment_grid_map(const GridMap& g, double width_param) {
  if (!(width_param > 0.0)) throw ConfigError("width parameter must be positive");
  const Grid grid{g.width(), g.height()};
  const std::size_t n_cells = static_cast<std::size_t>(g.width()) * g.height();

  std::vector<bool> free(n_cells, false);
  std::size_t n_free = 0;
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      if (g.at(r, c) == Occupancy::kFree) {
        free[grid.idx(r, c)] = true;
        ++n_free;
      }
    }
  }
  if (n_free == 0) throw EmptyMapError("map has no free space");

  const std::vector<double> sq = squared_distance_transform(g);

  // Seeds: connected clusters of cells with clearance >= width/2 (these are
  // exactly the clusters containing the relevant distance-transform maxima).
  const double threshold_cells = width_param / (2.0 * g.resolution());
  const double threshold_sq = threshold_cells * threshold_cells;
  std::vector<bool> seed_mask(n_cells, false);
  bool any_seed = false;
  for (std::size_t i = 0; i < n_cells; ++i) {
    if (free[i] && sq[i] >= threshold_sq) {
      seed_mask[i] = true;
      any_seed = true;
    }
  }
  if (!any_seed) {
    // Narrow map: fall back to the global clearance maxima.
    double best = 0.0;
    for (std::size_t i = 0; i < n_cells; ++i) {
      if (free[i]) best = std::max(best, sq[i]);
    }
    for (std::size_t i = 0; i < n_cells; ++i) {
      if (free[i] && sq[i] == best) seed_mask[i] = true;
    }
  }
  std::vector<int> seed_labels;
  label_components(grid, seed_mask, seed_labels, /*eight_connected=*/true);

  std::vector<int> labels = watershed(grid, free, seed_labels);

  // Split watershed output into 4-connected pieces so boundary tracing is
  // well defined, then absorb tiny fragments.
  {
    std::vector<bool> mask(n_cells);
    std::vector<int> refined(n_cells, -1);
    int next = 0;
    for (int pass_label = 0;; ++pass_label) {
      bool found = false;
      for (std::size_t i = 0; i < n_cells; ++i) {
        if (labels[i] == pass_label) {
          found = true;
          break;
        }
      }
      if (!found) break;
      for (std::size_t i = 0; i < n_cells; ++i) mask[i] = labels[i] == pass_label;
      std::vector<int> comp;
      const int n_comp = label_components(grid, mask, comp, /*eight_connected=*/false);
      for (std::size_t i = 0; i < n_cells; ++i) {
        if (comp[i] >= 0) refined[i] = next + comp[i];
      }
      next += n_comp;
    }
    labels = std::move(refined);
    const double cell_area = g.resolution() * g.resolution();
    merge_and_compact(grid, labels, next, cell_area);
  }

  // Recount labels and find each region's first (row-major) cell.
  int n_labels = 0;
  for (int lab : labels) n_labels = std::max(n_labels, lab + 1);
  std::vector<std::size_t> first_cell(static_cast<std::size_t>(n_labels), n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) {
    if (labels[i] >= 0 && first_cell[static_cast<std::size_t>(labels[i])] == n_cells) {
      first_cell[static_cast<std::size_t>(labels[i])] = i;
    }
  }

  // Passages: for every adjacent label pair, group the boundary cracks into
  // contiguous gaps, take the narrowest gap, and place the passage at that
  // gap's point of largest clearance (the doorway midpoint).
  struct Crack {
    std::size_t cell_a;
    std::size_t cell_b;
    Point2 locus;   // midpoint of the two cell centers
    double clear;   // min clearance of the flanking cells (cells)
    long key_r, key_c;  // doubled-coordinate midpoint for adjacency grouping
  };
  std::map<std::pair<int, int>, std::vector<Crack>> boundaries;
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      const int a = labels[grid.idx(r, c)];
      if (a < 0) continue;
      const auto consider = [&](int nr, int nc) {
        const int b = labels[grid.idx(nr, nc)];
        if (b < 0 || b == a) return;
        const std::size_t ia = grid.idx(r, c);
        const std::size_t ib = grid.idx(nr, nc);
        const Point2 pa = g.cell_center(r, c);
        const Point2 pb = g.cell_center(nr, nc);
        Crack crack;
        crack.cell_a = ia;
        crack.cell_b = ib;
        crack.locus = {0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)};
        crack.clear = std::min(std::sqrt(sq[ia]), std::sqrt(sq[ib]));
        crack.key_r = 2L * r + (nr - r);
        crack.key_c = 2L * c + (nc - c);
        boundaries[{std::min(a, b), std::max(a, b)}].push_back(crack);
      };
      if (c + 1 < grid.width) consider(r, c + 1);
      if (r + 1 < grid.height) consider(r + 1, c);
    }
  }

  std::vector<AdjacencyEdge> adjacency;
  std::vector<std::vector<Point2>> area_passages(static_cast<std::size_t>(n_labels));
  for (auto& [pair, cracks] : boundaries) {
    // Group cracks into gaps: cracks within Chebyshev distance 2 in doubled
    // coordinates belong to the same doorway.
    const std::size_t m = cracks.size();
    std::vector<int> gap(m, -1);
    int n_gaps = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (gap[i] >= 0) continue;
      gap[i] = n_gaps;
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < m; ++j) {
          if (gap[j] >= 0) continue;
          if (std::abs(cracks[cur].key_r - cracks[j].key_r) <= 2 &&
              std::abs(cracks[cur].key_c - cracks[j].key_c) <= 2) {
            gap[j] = n_gaps;
            stack.push_back(j);
          }
        }
      }
      ++n_gaps;
    }
    // One passage per gap (a doorway is one contiguous boundary stretch),
    // placed at the gap's widest-clearance crack, i.e. the doorway middle.
    // Separate doors between the same two areas yield separate passages.
    std::vector<std::size_t> gap_best(static_cast<std::size_t>(n_gaps), m);
    for (std::size_t i = 0; i < m; ++i) {
      auto& best = gap_best[static_cast<std::size_t>(gap[i])];
      if (best == m || cracks[i].clear > cracks[best].clear ||
          (cracks[i].clear == cracks[best].clear && i < best)) {
        best = i;
      }
    }
    std::size_t narrowest = gap_best[0];
    for (int gi = 0; gi < n_gaps; ++gi) {
      const std::size_t cand = gap_best[static_cast<std::size_t>(gi)];
      const Point2 passage = cracks[cand].locus;
      area_passages[static_cast<std::size_t>(pair.first)].push_back(passage);
      area_passages[static_cast<std::size_t>(pair.second)].push_back(passage);
      if (cracks[cand].clear < cracks[narrowest].clear) narrowest = cand;
    }
    // The adjacency edge records the narrowest gap's passage.
    adjacency.push_back({pair.first, pair.second, cracks[narrowest].locus});
  }

  // Trace, simplify and assemble the areas.
  AreaGraph out;
  out.resolution = g.resolution();
  const double tol = g.resolution();  // Douglas-Peucker tolerance: one cell
  for (int lab = 0; lab < n_labels; ++lab) {
    std::vector<Point2> ring = trace_region(grid, labels, lab, first_cell[lab], g);
    if (ring.size() < 3) continue;  // single-crack sliver; cannot happen in practice
    std::vector<Point2> simplified = simplify_ring(ring, tol);
    Polygon2 poly = [&] {
      try {
        Polygon2 p(simplified);
        if (!is_simple(p)) throw DegeneratePolygon("simplification broke the ring");
        return p;
      } catch (const DegeneratePolygon&) {
        return Polygon2(ring);  // fall back to the exact traced boundary
      }
    }();

    // Snap passages onto the simplified boundary so every stored passage
    // lies exactly on its polygon.
    std::vector<Point2> passages;
    for (const Point2& p : area_passages[static_cast<std::size_t>(lab)]) {
      const Point2 snapped = project_to_boundary(poly, p);
      bool dup = false;
      for (const Point2& q : passages) {
        if (almost_equal(q, snapped)) dup = true;
      }
      if (!dup) passages.push_back(snapped);
    }
    std::sort(passages.begin(), passages.end(), [](Point2 a, Point2 b) {
      if (a.x != b.x) return a.x < b.x;
      return a.y < b.y;
    });

    out.areas.push_back(Area{lab, std::move(poly), std::move(passages), std::nullopt});
  }
  out.adjacency = std::move(adjacency);
  return out;
}

}  // namespace areamatch
