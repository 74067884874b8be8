#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace scengen {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Oriented rectangle given by center, heading of the long axis, and dimensions.
struct OrientedBox {
  Vec2 center;
  double heading = 0.0;
  double length = 4.5;
  double width = 2.0;

  std::array<Vec2, 4> corners() const;
};

// Closest distance between two segments; 0 when they intersect.
double segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

// First intersection point of segments [a0,a1] and [b0,b1], parameterized
// along a. Collinear overlaps report the overlap start (in a's direction).
// Returns the parameter t in [0,1] along a and the point.
struct SegmentHit {
  double t_along_a;
  Vec2 point;
};
std::optional<SegmentHit> segment_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

// Separating-axis overlap test for two oriented rectangles.
bool boxes_overlap(const OrientedBox& a, const OrientedBox& b);

// Gap between two oriented rectangles: 0 when overlapping, otherwise the
// minimum distance between their boundaries.
double box_gap(const OrientedBox& a, const OrientedBox& b);

// Distance from a point to a polyline.
double point_polyline_distance(Vec2 p, const std::vector<Vec2>& polyline);

}  // namespace scengen
