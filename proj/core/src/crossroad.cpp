#include "scengen/crossroad.hpp"

#include <cmath>
#include <numbers>

#include "scengen/errors.hpp"
#include "scengen/numeric.hpp"

namespace scengen {

namespace {

constexpr int kArcChords = 64;

// Outward unit vector of approach a (0=E 1=N 2=W 3=S, counterclockwise).
Vec2 outward(int a) {
  switch (a & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Vec2 rot90ccw(Vec2 v) { return {-v.y, v.x}; }

struct Label {
  int approach;
  bool entry;
};

Label parse_label(std::string_view name) {
  if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] <= '8') {
    const int idx = name[1] - '1';  // 0..7
    return {idx / 2, idx % 2 == 0};
  }
  throw Error("unknown waypoint label: '" + std::string(name) + "'");
}

}  // namespace

SignalPhase CrossroadMap::phase(int approach, double t) const {
  if (!signal) return SignalPhase::kNone;
  const SignalTiming& s = *signal;
  const double cycle = s.green_s + s.yellow_s + s.red_s;
  const double offset = (approach % 2 == 0) ? 0.0 : s.green_s + s.yellow_s;
  double tc = std::fmod(t - offset, cycle);
  if (tc < 0.0) tc += cycle;
  if (tc < s.green_s) return SignalPhase::kGreen;
  if (tc < s.green_s + s.yellow_s) return SignalPhase::kYellow;
  return SignalPhase::kRed;
}

CrossroadMap build_crossroad(const StaticMapSpec& spec, double waypoint_setback) {
  spec.validate();
  if (waypoint_setback <= 0.0) throw Error("waypoint setback must be positive");

  CrossroadMap map;
  map.geometry = spec;
  map.waypoint_setback = std::min(waypoint_setback, spec.approach_length);
  map.stop_line = spec.junction_half_width;

  const double h = spec.junction_half_width;
  const double d = spec.lane_width * 0.5;  // innermost lane centerline offset
  const double reach = h + map.waypoint_setback;

  for (int a = 0; a < 4; ++a) {
    const Vec2 u = outward(a);
    const Vec2 entry_offset = rot90ccw(u * -1.0);  // left of inbound travel
    const Vec2 exit_offset = rot90ccw(u);          // left of outbound travel
    map.waypoints["P" + std::to_string(2 * a + 1)] = u * reach + entry_offset * d;
    map.waypoints["P" + std::to_string(2 * a + 2)] = u * reach + exit_offset * d;
  }

  // Conflict points from the four catalog path pairs.
  const std::pair<std::string, std::string> pairs[4][2] = {
      {{"P5", "P2"}, {"P3", "P8"}},
      {{"P5", "P2"}, {"P1", "P4"}},
      {{"P1", "P6"}, {"P7", "P2"}},
      {{"P5", "P8"}, {"P3", "P8"}},
  };
  for (int c = 0; c < 4; ++c) {
    const PathPlan ego = plan_path(map, pairs[c][0].first, pairs[c][0].second);
    const PathPlan bv = plan_path(map, pairs[c][1].first, pairs[c][1].second);
    const auto point = conflict_point(ego, bv);
    if (!point) throw Error("catalog scenario pair has no conflict point");
    map.conflicts["C" + std::to_string(c + 1)] = *point;
  }
  return map;
}

PathPlan plan_path(const CrossroadMap& map, std::string_view start, std::string_view end) {
  const Label from = parse_label(start);
  const Label to = parse_label(end);
  if (!from.entry) throw Error("path must start at an entry waypoint: '" + std::string(start) + "'");
  if (to.entry) throw Error("path must end at an exit waypoint: '" + std::string(end) + "'");
  if (from.approach == to.approach) {
    throw Error("illegal movement (U-turn): " + std::string(start) + " -> " + std::string(end));
  }

  const double h = map.geometry.junction_half_width;
  const double d = map.geometry.lane_width * 0.5;
  const Vec2 p_start = map.waypoints.at(std::string(start));
  const Vec2 p_end = map.waypoints.at(std::string(end));
  const Vec2 ua = outward(from.approach);
  const Vec2 ub = outward(to.approach);

  PathPlan plan;
  plan.start_ = std::string(start);
  plan.end_ = std::string(end);
  plan.approach_ = from.approach;

  auto add_line = [&plan](Vec2 p0, Vec2 p1) {
    PathPlan::Segment seg;
    seg.is_arc = false;
    seg.p0 = p0;
    seg.p1 = p1;
    seg.length = distance(p0, p1);
    plan.segments_.push_back(seg);
  };
  auto add_arc = [&plan](Vec2 center, double radius, double angle0, double sweep) {
    PathPlan::Segment seg;
    seg.is_arc = true;
    seg.center = center;
    seg.radius = radius;
    seg.angle0 = angle0;
    seg.sweep = sweep;
    seg.length = radius * std::fabs(sweep);
    plan.segments_.push_back(seg);
  };

  const int diff = (to.approach - from.approach + 4) & 3;
  if (diff == 2) {
    add_line(p_start, p_end);
  } else {
    // Turns arc around the junction corner shared by the two approaches.
    // The far turn (diff 1) crosses the junction clockwise with radius h+d;
    // the near turn (diff 3) hugs the corner counterclockwise with radius h-d.
    const Vec2 corner = (ua + ub) * h;
    const double radius = diff == 1 ? h + d : h - d;
    const double sweep =
        diff == 1 ? -std::numbers::pi / 2.0 : std::numbers::pi / 2.0;
    if (radius <= 0.0) throw Error("lane width too large for a corner turn");

    // Tangent points are the feet of the perpendiculars from the corner onto
    // the entry and exit lane lines; both land on the junction boundary.
    const Vec2 in_dir = ua * -1.0;
    const Vec2 arc_start = p_start + in_dir * (map.waypoint_setback);
    const Vec2 arc_end = p_end + ub * (-map.waypoint_setback);

    const double angle0 = std::atan2(arc_start.y - corner.y, arc_start.x - corner.x);
    add_line(p_start, arc_start);
    add_arc(corner, radius, angle0, sweep);
    add_line(arc_end, p_end);
  }

  plan.junction_entry_s_ = map.waypoint_setback;
  double total = 0.0;
  for (const auto& seg : plan.segments_) total += seg.length;
  plan.length_ = total;

  // Sampled polyline for intersection queries.
  plan.polyline_.push_back(plan.segments_.front().is_arc
                               ? plan.pose_at(0.0).position
                               : plan.segments_.front().p0);
  for (const auto& seg : plan.segments_) {
    if (!seg.is_arc) {
      plan.polyline_.push_back(seg.p1);
    } else {
      for (int i = 1; i <= kArcChords; ++i) {
        const double a = seg.angle0 + seg.sweep * i / kArcChords;
        plan.polyline_.push_back(
            {seg.center.x + seg.radius * std::cos(a), seg.center.y + seg.radius * std::sin(a)});
      }
    }
  }
  return plan;
}

PathPlan::Pose PathPlan::pose_at(double s) const {
  double remaining = clamp(s, 0.0, length_);
  for (const Segment& seg : segments_) {
    if (remaining > seg.length && &seg != &segments_.back()) {
      remaining -= seg.length;
      continue;
    }
    const double local = std::min(remaining, seg.length);
    if (!seg.is_arc) {
      const double t = seg.length > 0.0 ? local / seg.length : 0.0;
      const Vec2 p = seg.p0 + (seg.p1 - seg.p0) * t;
      const double heading = std::atan2(seg.p1.y - seg.p0.y, seg.p1.x - seg.p0.x);
      return {p, heading};
    }
    const double a = seg.angle0 + seg.sweep * (seg.length > 0.0 ? local / seg.length : 0.0);
    const Vec2 p{seg.center.x + seg.radius * std::cos(a),
                 seg.center.y + seg.radius * std::sin(a)};
    const double heading = a + (seg.sweep >= 0.0 ? 1.0 : -1.0) * std::numbers::pi / 2.0;
    return {p, heading};
  }
  return {{0.0, 0.0}, 0.0};
}

std::optional<Vec2> conflict_point(const PathPlan& a, const PathPlan& b) {
  const auto& pa = a.polyline();
  const auto& pb = b.polyline();
  for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
    bool found = false;
    double best_t = 2.0;
    Vec2 best_point;
    for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
      const auto hit = segment_intersection(pa[i], pa[i + 1], pb[j], pb[j + 1]);
      if (hit && hit->t_along_a < best_t) {
        best_t = hit->t_along_a;
        best_point = hit->point;
        found = true;
      }
    }
    if (found) return best_point;
  }
  return std::nullopt;
}

}  // namespace scengen
