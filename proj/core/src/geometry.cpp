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

#include "areamatch/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "areamatch/errors.hpp"

namespace areamatch {
namespace {

constexpr double kPi = std::numbers::pi;

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Lexicographic (x, y) order used for deterministic tie-breaking.
bool point_less(Point2 a, Point2 b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

bool segment_less(const Segment2& a, const Segment2& b) {
  if (point_less(a.a, b.a)) return true;
  if (point_less(b.a, a.a)) return false;
  return point_less(a.b, b.b);
}

// Canonical endpoint order for an undirected segment.
Segment2 canonical(Segment2 s) {
  if (point_less(s.b, s.a)) std::swap(s.a, s.b);
  return s;
}

// Proper or touching intersection of segments [a, b] and [c, d], excluding
// shared endpoints.
bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = cross(a, b, c);
  const double d2 = cross(a, b, d);
  const double d3 = cross(c, d, a);
  const double d4 = cross(c, d, b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  return false;
}

}  // namespace

Polygon2::Polygon2(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  for (const Point2& p : vertices_) {
    if (!finite(p)) throw DegeneratePolygon("polygon vertex is not finite");
  }
  // Collapse consecutive duplicates, including the wrap-around pair.
  std::vector<Point2> cleaned;
  cleaned.reserve(vertices_.size());
  for (const Point2& p : vertices_) {
    if (cleaned.empty() || !almost_equal(cleaned.back(), p)) cleaned.push_back(p);
  }
  while (cleaned.size() > 1 && almost_equal(cleaned.front(), cleaned.back())) {
    cleaned.pop_back();
  }
  vertices_ = std::move(cleaned);

  if (vertices_.size() < 3) {
    throw DegeneratePolygon("polygon needs at least 3 distinct vertices");
  }
  const double signed_area = signed_ring_area(vertices_);
  if (std::abs(signed_area) < kDegenerateArea) {
    throw DegeneratePolygon("polygon area below degeneracy threshold");
  }
  if (signed_area < 0) std::reverse(vertices_.begin(), vertices_.end());
}

double signed_ring_area(std::span<const Point2> ring) {
  double twice = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = ring[i];
    const Point2& q = ring[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

double polygon_area(const Polygon2& p) {
  const double a = signed_ring_area(p.vertices());
  if (a < kDegenerateArea) throw DegeneratePolygon("degenerate polygon area");
  return a;
}

bool is_simple(const Polygon2& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges (they share an endpoint).
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

Polygon2 convex_hull(std::span<const Point2> points) {
  if (points.size() < 3) throw DegeneratePolygon("convex hull needs at least 3 points");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) { return almost_equal(a, b); }),
            pts.end());
  if (pts.size() < 3) throw DegeneratePolygon("convex hull needs 3 distinct points");

  const std::size_t n = pts.size();
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegeneratePolygon("all points collinear");
  return Polygon2(std::move(hull));
}

Segment2 hull_diameter_segment(const Polygon2& hull) {
  const auto& v = hull.vertices();
  const std::size_t n = v.size();
  Segment2 best{v[0], v[1]};
  double best_d = distance(v[0], v[1]);
  auto consider = [&](std::size_t i, std::size_t j) {
    const double d = distance(v[i], v[j]);
    Segment2 s = canonical({v[i], v[j]});
    if (d > best_d + kPointEps || (std::abs(d - best_d) <= kPointEps && segment_less(s, best))) {
      best_d = d;
      best = s;
    }
  };
  if (n == 3) {
    consider(0, 1);
    consider(1, 2);
    consider(0, 2);
    return best;
  }
  // Rotating calipers: advance the antipodal vertex j while the triangle on
  // edge (i, i+1) keeps growing.
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t i1 = (i + 1) % n;
    while (std::abs(cross(v[i], v[i1], v[(j + 1) % n])) >
           std::abs(cross(v[i], v[i1], v[j]))) {
      j = (j + 1) % n;
    }
    consider(i, j);
    consider(i1, j);
  }
  return best;
}

double hull_longest_distance(const Polygon2& hull) {
  return length(hull_diameter_segment(hull));
}

namespace {

// One non-vertical edge viewed as the top of a signed trapezoid that drops
// to a common base line: slab [xa, xb] with the edge running from (xa, ya)
// to (xb, yb). CCW polygons decompose as indicator(P) = sum of sign * T.
struct Slab {
  double xa, xb;
  double ya, yb;
  double sign;  // +1 for leftward edges (region tops), -1 for rightward
};

std::vector<Slab> slab_decomposition(const Polygon2& poly) {
  const auto& v = poly.vertices();
  std::vector<Slab> slabs;
  slabs.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % v.size()];
    if (a.x == b.x) continue;  // vertical edges span no slab
    if (a.x < b.x) {
      slabs.push_back({a.x, b.x, a.y, b.y, -1.0});
    } else {
      slabs.push_back({b.x, a.x, b.y, a.y, 1.0});
    }
  }
  return slabs;
}

// Integral of (min(top_s, top_t) - base) over the common slab interval.
double slab_pair_area(const Slab& s, const Slab& t, double base) {
  const double lo = std::max(s.xa, t.xa);
  const double hi = std::min(s.xb, t.xb);
  if (lo >= hi) return 0.0;
  const double slope_s = (s.yb - s.ya) / (s.xb - s.xa);
  const double slope_t = (t.yb - t.ya) / (t.xb - t.xa);
  auto top_s = [&](double x) { return s.ya + (x - s.xa) * slope_s; };
  auto top_t = [&](double x) { return t.ya + (x - t.xa) * slope_t; };
  auto piece = [&](double u, double v) {
    const double mu = std::min(top_s(u), top_t(u));
    const double mv = std::min(top_s(v), top_t(v));
    return (v - u) * (0.5 * (mu + mv) - base);
  };
  // The minimum of two linear tops breaks at most once inside the interval.
  const double du = top_s(lo) - top_t(lo);
  const double dv = top_s(hi) - top_t(hi);
  if ((du > 0 && dv < 0) || (du < 0 && dv > 0)) {
    const double xc = lo + (hi - lo) * du / (du - dv);
    if (xc > lo && xc < hi) return piece(lo, xc) + piece(xc, hi);
  }
  return piece(lo, hi);
}

bool ring_less(std::span<const Point2> a, std::span<const Point2> b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](Point2 p, Point2 q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
      });
}

}  // namespace

double polygon_overlap_area(const Polygon2& p, const Polygon2& q) {
  // Canonical argument order keeps the result exactly symmetric.
  if (ring_less(q.vertices(), p.vertices())) return polygon_overlap_area(q, p);

  auto bbox = [](const Polygon2& poly) {
    double lo_x = poly[0].x, hi_x = poly[0].x, lo_y = poly[0].y, hi_y = poly[0].y;
    for (const Point2& v : poly.vertices()) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
    return std::array<double, 4>{lo_x, hi_x, lo_y, hi_y};
  };
  const auto bp = bbox(p);
  const auto bq = bbox(q);
  if (bp[1] < bq[0] || bq[1] < bp[0] || bp[3] < bq[2] || bq[3] < bp[2]) return 0.0;

  // indicator(P) * indicator(Q) integrates as the signed sum of pairwise
  // trapezoid intersections; the base sits below both polygons so every
  // trapezoid is well formed. Robust for concave rings and shared edges.
  const double base = std::min(bp[2], bq[2]) - 1.0;
  const auto sp = slab_decomposition(p);
  const auto sq = slab_decomposition(q);
  double total = 0.0;
  for (const Slab& s : sp) {
    for (const Slab& t : sq) {
      total += s.sign * t.sign * slab_pair_area(s, t, base);
    }
  }
  total = std::max(total, 0.0);
  return std::min(total, std::min(polygon_area(p), polygon_area(q)));
}

Point2 project_to_boundary(const Polygon2& poly, Point2 p) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  Point2 best = v[0];
  double best_d = distance(p, v[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % n];
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 q = a + t * ab;
    const double d = distance(p, q);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

double distance_to_boundary(const Polygon2& poly, Point2 p) {
  return distance(p, project_to_boundary(poly, p));
}

RigidTransform2D RigidTransform2D::inverse() const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // R(-theta) * (-t)
  return {normalize_angle(-theta), {-(c * t.x + s * t.y), -(-s * t.x + c * t.y)}};
}

RigidTransform2D compose(const RigidTransform2D& outer, const RigidTransform2D& inner) {
  const double c = std::cos(outer.theta);
  const double s = std::sin(outer.theta);
  Point2 t{c * inner.t.x - s * inner.t.y + outer.t.x,
           s * inner.t.x + c * inner.t.y + outer.t.y};
  return {normalize_angle(outer.theta + inner.theta), t};
}

Point2 apply_rigid(const RigidTransform2D& t, Point2 p) {
  const double c = std::cos(t.theta);
  const double s = std::sin(t.theta);
  return {c * p.x - s * p.y + t.t.x, s * p.x + c * p.y + t.t.y};
}

Segment2 apply_rigid(const RigidTransform2D& t, const Segment2& s) {
  return {apply_rigid(t, s.a), apply_rigid(t, s.b)};
}

Polygon2 apply_rigid(const RigidTransform2D& t, const Polygon2& p) {
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const Point2& v : p.vertices()) out.push_back(apply_rigid(t, v));
  // Rigid transforms preserve orientation, so the ring stays CCW.
  return Polygon2(std::move(out));
}

std::array<double, 2> rotation_between_segments(const Segment2& sa, const Segment2& sb) {
  assert(length(sa) > 0 && length(sb) > 0);
  const Point2 da = sa.b - sa.a;
  const Point2 db = sb.b - sb.a;
  const double theta = normalize_angle(std::atan2(db.y, db.x) - std::atan2(da.y, da.x));
  return {theta, normalize_angle(theta + kPi)};
}

RigidTransform2D transform_from_match(double theta, Point2 pa, Point2 pb) {
  // Rotation about pa composed with the translation carrying pa onto pb:
  // x -> R(x - pa) + pb, i.e. t = pb - R * pa.
  const double th = normalize_angle(theta);
  const double c = std::cos(th);
  const double s = std::sin(th);
  return {th, {pb.x - (c * pa.x - s * pa.y), pb.y - (s * pa.x + c * pa.y)}};
}

double normalize_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // in [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double circular_distance(double a, double b) { return std::abs(normalize_angle(a - b)); }

double circular_mean(std::span<const double> angles) {
  double sx = 0.0;
  double sy = 0.0;
  for (double a : angles) {
    sx += std::cos(a);
    sy += std::sin(a);
  }
  return normalize_angle(std::atan2(sy, sx));
}

}  // namespace areamatch
