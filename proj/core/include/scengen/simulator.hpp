#pragma once

#include <string>
#include <vector>

#include "scengen/catalog.hpp"
#include "scengen/crossroad.hpp"
#include "scengen/search_space.hpp"

namespace scengen {

struct SimConfig {
  double dt = 0.05;          // s
  double duration = 30.0;    // s
  double vehicle_length = 4.5;
  double vehicle_width = 2.0;
  double accel_limit = 3.0;       // m/s^2
  double speed_gain = 1.5;        // 1/s, proportional speed tracking
  double brake_decel_threshold = -4.0;  // m/s^2, sudden-brake event
  bool center_distance_gap = false;     // gap = center distance instead of box gap
  double initial_speed_factor = 1.0;    // spawn speed = factor * target speed

  void validate() const;
};

struct VehicleState {
  double s = 0.0;  // arc length along the vehicle's path
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double speed = 0.0;
  double accel = 0.0;
  bool active = false;
};

struct TraceEvent {
  double t = 0.0;
  std::string kind;   // collision | red_light_crossing | sudden_brake
  std::string actor;  // ego | bv | both
};

struct TraceSample {
  double t = 0.0;
  VehicleState ego;
  VehicleState bv;
  int signal_phase = -1;  // ego approach phase, SignalPhase values
  double gap = 0.0;       // bounding-box gap; +inf unless both vehicles active
};

// Deterministic fixed-step record of one simulated scenario.
struct SimulationTrace {
  std::vector<TraceSample> samples;
  std::vector<TraceEvent> events;
  PathPlan ego_path;
  PathPlan bv_path;
  SimConfig config;

  std::string to_csv() const;
  std::string to_json_text() const;
};

// Runs the two-vehicle crossroad episode. The override vector may carry
// ego_speed, bv_speed, bv_spawn_delay, and ego_spawn_offset; anything else is
// ignored here. Values must already be clamped to the space bounds. The
// simulation itself is pure: no randomness, identical inputs give identical
// traces.
SimulationTrace simulate(const CrossroadMap& map, const LogicalScenario& logical,
                         const SearchSpace& space, const ScenarioVector& overrides,
                         const SimConfig& cfg = {});

}  // namespace scengen
