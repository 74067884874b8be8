#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scengen/geometry.hpp"
#include "scengen/map_spec.hpp"

namespace scengen {

// Fixed-cycle signal: per approach, green then yellow then red. East/west
// approaches start their cycle at t=0; north/south are offset by green+yellow.
struct SignalTiming {
  double green_s = 20.0;
  double yellow_s = 3.0;
  double red_s = 23.0;
};

enum class SignalPhase { kNone = -1, kGreen = 0, kYellow = 1, kRed = 2 };

// Concrete crossroad: waypoints P1..P8 (entry/exit pair per approach, labeled
// counterclockwise from the east approach entry), conflict points C1..C4
// computed as the path-pair intersections of the four catalog scenarios, and
// stop lines at the junction boundary. Vehicles travel on the left-hand lane
// of their carriageway; the innermost lane centerline sits lane_width/2 from
// the road axis.
struct CrossroadMap {
  StaticMapSpec geometry;
  double waypoint_setback = 40.0;  // m between stop line and entry waypoint
  std::map<std::string, Vec2> waypoints;  // P1..P8
  std::map<std::string, Vec2> conflicts;  // C1..C4
  double stop_line = 7.0;                 // distance of stop lines from center
  std::optional<SignalTiming> signal;

  SignalPhase phase(int approach, double t) const;
};

CrossroadMap build_crossroad(const StaticMapSpec& spec, double waypoint_setback = 40.0);

// A planned route between an entry and an exit waypoint: straight approach
// legs joined by at most one circular arc through the junction, tangent to
// both legs. Arc-length parameterized; poses are exact (not sampled).
class PathPlan {
 public:
  struct Pose {
    Vec2 position;
    double heading;
  };

  const std::string& start() const { return start_; }
  const std::string& end() const { return end_; }
  double length() const { return length_; }
  int approach() const { return approach_; }  // 0=E 1=N 2=W 3=S (entry side)
  double junction_entry_s() const { return junction_entry_s_; }

  Pose pose_at(double s) const;
  const std::vector<Vec2>& polyline() const { return polyline_; }

 private:
  friend PathPlan plan_path(const CrossroadMap&, std::string_view, std::string_view);

  struct Segment {
    bool is_arc = false;
    Vec2 p0, p1;          // line
    Vec2 center;          // arc
    double radius = 0.0;  // arc
    double angle0 = 0.0;  // arc start angle
    double sweep = 0.0;   // signed arc sweep, +ccw
    double length = 0.0;
  };

  std::string start_, end_;
  std::vector<Segment> segments_;
  std::vector<Vec2> polyline_;
  double length_ = 0.0;
  int approach_ = 0;
  double junction_entry_s_ = 0.0;
};

// Throws on unknown labels, waypoints that are not an entry/exit pair, and
// U-turns (exit on the entry's own approach).
PathPlan plan_path(const CrossroadMap& map, std::string_view start, std::string_view end);

// First intersection of the two paths in a's arc-length order, or nothing.
std::optional<Vec2> conflict_point(const PathPlan& a, const PathPlan& b);

}  // namespace scengen
