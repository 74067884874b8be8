#include "scengen/geometry.hpp"

#include <algorithm>
#include <limits>

namespace scengen {

namespace {

constexpr double kEps = 1e-12;

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

std::array<Vec2, 4> OrientedBox::corners() const {
  const double c = std::cos(heading);
  const double s = std::sin(heading);
  const Vec2 ax{c * length * 0.5, s * length * 0.5};
  const Vec2 ay{-s * width * 0.5, c * width * 0.5};
  return {center + ax + ay, center + ax - ay, center - ax - ay, center - ax + ay};
}

double segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  if (segment_intersection(a0, a1, b0, b1)) return 0.0;

  auto point_segment = [](Vec2 p, Vec2 s0, Vec2 s1) {
    const Vec2 d = s1 - s0;
    const double len2 = d.dot(d);
    if (len2 < kEps) return distance(p, s0);
    const double t = clamp01((p - s0).dot(d) / len2);
    return distance(p, s0 + d * t);
  };

  double best = point_segment(a0, b0, b1);
  best = std::min(best, point_segment(a1, b0, b1));
  best = std::min(best, point_segment(b0, a0, a1));
  best = std::min(best, point_segment(b1, a0, a1));
  return best;
}

std::optional<SegmentHit> segment_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
  const Vec2 r = a1 - a0;
  const Vec2 s = b1 - b0;
  const double rxs = r.cross(s);
  const Vec2 qp = b0 - a0;

  if (std::fabs(rxs) < kEps) {
    if (std::fabs(qp.cross(r)) > 1e-9) return std::nullopt;  // parallel, disjoint lines
    // Collinear: project b's endpoints on a and look for overlap.
    const double rlen2 = r.dot(r);
    if (rlen2 < kEps) {
      // a is a point; it intersects iff it lies within b.
      const double slen2 = s.dot(s);
      if (slen2 < kEps) {
        if (distance(a0, b0) < 1e-9) return SegmentHit{0.0, a0};
        return std::nullopt;
      }
      const double u = (a0 - b0).dot(s) / slen2;
      if (u < -kEps || u > 1.0 + kEps) return std::nullopt;
      return SegmentHit{0.0, a0};
    }
    double t0 = qp.dot(r) / rlen2;
    double t1 = (b1 - a0).dot(r) / rlen2;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0);
    const double hi = std::min(1.0, t1);
    if (lo > hi + kEps) return std::nullopt;
    return SegmentHit{lo, a0 + r * lo};
  }

  const double t = qp.cross(s) / rxs;
  const double u = qp.cross(r) / rxs;
  const double tol = 1e-9;
  if (t < -tol || t > 1.0 + tol || u < -tol || u > 1.0 + tol) return std::nullopt;
  const double tc = clamp01(t);
  return SegmentHit{tc, a0 + r * tc};
}

bool boxes_overlap(const OrientedBox& a, const OrientedBox& b) {
  const auto ca = a.corners();
  const auto cb = b.corners();
  const Vec2 axes[4] = {
      {std::cos(a.heading), std::sin(a.heading)},
      {-std::sin(a.heading), std::cos(a.heading)},
      {std::cos(b.heading), std::sin(b.heading)},
      {-std::sin(b.heading), std::cos(b.heading)},
  };
  for (const Vec2& axis : axes) {
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    double bmin = amin, bmax = -amin;
    for (const Vec2& p : ca) {
      const double d = p.dot(axis);
      amin = std::min(amin, d);
      amax = std::max(amax, d);
    }
    for (const Vec2& p : cb) {
      const double d = p.dot(axis);
      bmin = std::min(bmin, d);
      bmax = std::max(bmax, d);
    }
    if (amax < bmin || bmax < amin) return false;
  }
  return true;
}

double box_gap(const OrientedBox& a, const OrientedBox& b) {
  if (boxes_overlap(a, b)) return 0.0;
  const auto ca = a.corners();
  const auto cb = b.corners();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const Vec2 a0 = ca[i];
    const Vec2 a1 = ca[(i + 1) % 4];
    for (int j = 0; j < 4; ++j) {
      best = std::min(best, segment_distance(a0, a1, cb[j], cb[(j + 1) % 4]));
    }
  }
  return best;
}

double point_polyline_distance(Vec2 p, const std::vector<Vec2>& polyline) {
  if (polyline.empty()) return std::numeric_limits<double>::infinity();
  if (polyline.size() == 1) return distance(p, polyline.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Vec2 d = polyline[i + 1] - polyline[i];
    const double len2 = d.dot(d);
    double t = len2 < kEps ? 0.0 : clamp01((p - polyline[i]).dot(d) / len2);
    best = std::min(best, distance(p, polyline[i] + d * t));
  }
  return best;
}

}  // namespace scengen
