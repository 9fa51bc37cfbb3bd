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

#ifndef AREAMATCH_GEOMETRY_HPP_
#define AREAMATCH_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace areamatch {

// Tolerance for treating two points as identical (meters).
inline constexpr double kPointEps = 1e-9;
// Polygons with less area than this are degenerate (square meters).
inline constexpr double kDegenerateArea = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
// z component of the cross product (a - o) x (b - o).
inline double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool almost_equal(Point2 a, Point2 b, double eps = kPointEps) {
  return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

// Undirected segment between two distinct points.
struct Segment2 {
  Point2 a;
  Point2 b;
};

inline double length(const Segment2& s) { return distance(s.a, s.b); }
inline Point2 midpoint(const Segment2& s) {
  return {0.5 * (s.a.x + s.b.x), 0.5 * (s.a.y + s.b.y)};
}

// Simple polygon stored counter-clockwise. Construction collapses duplicate
// consecutive vertices, rejects degenerate rings and normalizes orientation.
class Polygon2 {
 public:
  // Throws DegeneratePolygon when fewer than 3 distinct vertices remain or
  // the enclosed area is below kDegenerateArea.
  explicit Polygon2(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

 private:
  std::vector<Point2> vertices_;
};

// Positive shoelace area of a CCW polygon (m^2).
double polygon_area(const Polygon2& p);

// Shoelace area of a raw CCW/CW ring; sign follows orientation.
double signed_ring_area(std::span<const Point2> ring);

// O(n^2) pairwise edge-crossing check, duplicate-vertex aware. Intended for
// validation and tests, not hot paths.
bool is_simple(const Polygon2& p);

// Smallest convex polygon containing all input points (monotone chain, CCW,
// collinear boundary points dropped). Throws DegeneratePolygon when all
// points are collinear.
Polygon2 convex_hull(std::span<const Point2> points);

// Maximum pairwise vertex distance of a convex polygon, via rotating
// calipers. The segment variant reports the endpoints realizing it, ties
// broken lexicographically.
double hull_longest_distance(const Polygon2& hull);
Segment2 hull_diameter_segment(const Polygon2& hull);

// Area of the intersection of two simple polygons (concave supported).
// Returns 0 for disjoint inputs; result never exceeds either input area.
double polygon_overlap_area(const Polygon2& p, const Polygon2& q);

// Closest point on (and distance to) the polygon's boundary.
Point2 project_to_boundary(const Polygon2& poly, Point2 p);
double distance_to_boundary(const Polygon2& poly, Point2 p);

// Rotation by theta about the origin followed by translation t.
struct RigidTransform2D {
  double theta = 0.0;  // radians in (-pi, pi]
  Point2 t;

  static RigidTransform2D identity() { return {}; }
  RigidTransform2D inverse() const;
};

// outer(inner(x)): apply `inner` first.
RigidTransform2D compose(const RigidTransform2D& outer, const RigidTransform2D& inner);

Point2 apply_rigid(const RigidTransform2D& t, Point2 p);
Segment2 apply_rigid(const RigidTransform2D& t, const Segment2& s);
Polygon2 apply_rigid(const RigidTransform2D& t, const Polygon2& p);

// Both rotations that carry the undirected direction of `sa` onto the
// undirected direction of `sb`: {theta, theta +- pi}, each in (-pi, pi].
// candidates[0] is the direct difference of the stored endpoint directions.
std::array<double, 2> rotation_between_segments(const Segment2& sa, const Segment2& sb);

// Transform rotating by theta about pa and moving pa onto pb.
RigidTransform2D transform_from_match(double theta, Point2 pa, Point2 pb);

// Angle helpers. Angles normalize into (-pi, pi].
double normalize_angle(double a);
double circular_distance(double a, double b);
double circular_mean(std::span<const double> angles);

inline double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }

}  // namespace areamatch

#endif  // AREAMATCH_GEOMETRY_HPP_
