#include "scengen/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "scengen/errors.hpp"
#include "scengen/numeric.hpp"

namespace scengen {

void SimConfig::validate() const {
  if (dt <= 0.0) throw Error("dt must be positive");
  if (duration <= dt) throw Error("duration must exceed dt");
  if (vehicle_length <= 0.0 || vehicle_width <= 0.0) throw Error("vehicle dims must be positive");
  if (accel_limit <= 0.0) throw Error("accel limit must be positive");
}

namespace {

struct Agent {
  const PathPlan* path;
  double target_speed;
  double spawn_time;
  double spawn_s;
  VehicleState state;
  bool departed = false;
  bool front_past_stop = false;

  void refresh_pose() {
    const auto pose = path->pose_at(state.s);
    state.x = pose.position.x;
    state.y = pose.position.y;
    state.heading = pose.heading;
  }
};

double named_or(const std::map<std::string, double>& named, const std::string& key,
                double fallback) {
  auto it = named.find(key);
  return it == named.end() ? fallback : it->second;
}

}  // namespace

SimulationTrace simulate(const CrossroadMap& map, const LogicalScenario& logical,
                         const SearchSpace& space, const ScenarioVector& overrides,
                         const SimConfig& cfg) {
  cfg.validate();
  if (!within_bounds(space, overrides)) {
    throw Error("override vector out of bounds; clamp before simulating");
  }
  const auto named = decode(space, overrides);

  const double ego_target = named_or(
      named, "ego_speed",
      logical.ego_sim_speed_override ? *logical.ego_sim_speed_override : logical.ego_speed);
  const double bv_target = named_or(named, "bv_speed", logical.bv_speed);
  const double bv_delay = named_or(named, "bv_spawn_delay", 0.0);
  const double ego_offset = named_or(named, "ego_spawn_offset", 0.0);

  SimulationTrace trace;
  trace.config = cfg;
  trace.ego_path = plan_path(map, logical.ego_start, logical.ego_end);
  trace.bv_path = plan_path(map, logical.bv_start, logical.bv_end);

  Agent ego{&trace.ego_path, ego_target, 0.0,
            clamp(ego_offset, 0.0, trace.ego_path.length()), VehicleState{}};
  Agent bv{&trace.bv_path, bv_target, bv_delay, 0.0, VehicleState{}};

  bool collision_latched = false;
  const int steps = static_cast<int>(std::llround(cfg.duration / cfg.dt));
  trace.samples.reserve(steps + 1);

  for (int k = 0; k <= steps; ++k) {
    const double t = k * cfg.dt;

    for (Agent* agent : {&ego, &bv}) {
      if (agent->departed) continue;
      if (!agent->state.active) {
        if (t + 1e-12 >= agent->spawn_time) {
          agent->state.active = true;
          agent->state.s = agent->spawn_s;
          agent->state.speed = std::max(0.0, cfg.initial_speed_factor * agent->target_speed);
          agent->state.accel = 0.0;
          agent->refresh_pose();
        }
        continue;
      }
      // Proportional speed tracking with clamped acceleration, then
      // semi-implicit Euler.
      const double prev_accel = agent->state.accel;
      double accel = cfg.speed_gain * (agent->target_speed - agent->state.speed);
      accel = clamp(accel, -cfg.accel_limit, cfg.accel_limit);
      agent->state.accel = accel;
      agent->state.speed = std::max(0.0, agent->state.speed + accel * cfg.dt);
      agent->state.s += agent->state.speed * cfg.dt;
      if (agent->state.s >= agent->path->length()) {
        agent->state.s = agent->path->length();
        agent->refresh_pose();
        agent->state.active = false;
        agent->state.speed = 0.0;
        agent->state.accel = 0.0;
        agent->departed = true;
        continue;
      }
      agent->refresh_pose();

      if (accel - prev_accel < 0.0 && accel < cfg.brake_decel_threshold &&
          prev_accel >= cfg.brake_decel_threshold) {
        trace.events.push_back({t, "sudden_brake", agent == &ego ? "ego" : "bv"});
      }

      // Red-light crossing: vehicle front passes the stop line during red.
      const double front_s = agent->state.s + cfg.vehicle_length * 0.5;
      if (!agent->front_past_stop && front_s >= agent->path->junction_entry_s()) {
        agent->front_past_stop = true;
        if (map.phase(agent->path->approach(), t) == SignalPhase::kRed) {
          trace.events.push_back({t, "red_light_crossing", agent == &ego ? "ego" : "bv"});
        }
      }
    }

    TraceSample sample;
    sample.t = t;
    sample.ego = ego.state;
    sample.bv = bv.state;
    sample.signal_phase = static_cast<int>(map.phase(trace.ego_path.approach(), t));
    sample.gap = kInf;
    if (ego.state.active && bv.state.active) {
      if (cfg.center_distance_gap) {
        sample.gap = std::hypot(ego.state.x - bv.state.x, ego.state.y - bv.state.y);
      } else {
        const OrientedBox a{{ego.state.x, ego.state.y}, ego.state.heading,
                            cfg.vehicle_length, cfg.vehicle_width};
        const OrientedBox b{{bv.state.x, bv.state.y}, bv.state.heading,
                            cfg.vehicle_length, cfg.vehicle_width};
        sample.gap = box_gap(a, b);
      }
      if (sample.gap <= 0.0 && !collision_latched) {
        collision_latched = true;
        trace.events.push_back({t, "collision", "both"});
      }
    }
    trace.samples.push_back(sample);
  }
  return trace;
}

std::string SimulationTrace::to_csv() const {
  std::ostringstream out;
  out << "t,ego_active,ego_s,ego_x,ego_y,ego_heading,ego_speed,ego_accel,"
         "bv_active,bv_s,bv_x,bv_y,bv_heading,bv_speed,bv_accel,signal_phase,gap\n";
  auto num = [](double v) { return std::isinf(v) ? std::string("inf") : format_exact(v); };
  for (const TraceSample& s : samples) {
    out << num(s.t) << ',' << (s.ego.active ? 1 : 0) << ',' << num(s.ego.s) << ','
        << num(s.ego.x) << ',' << num(s.ego.y) << ',' << num(s.ego.heading) << ','
        << num(s.ego.speed) << ',' << num(s.ego.accel) << ',' << (s.bv.active ? 1 : 0)
        << ',' << num(s.bv.s) << ',' << num(s.bv.x) << ',' << num(s.bv.y) << ','
        << num(s.bv.heading) << ',' << num(s.bv.speed) << ',' << num(s.bv.accel) << ','
        << s.signal_phase << ',' << num(s.gap) << '\n';
  }
  return out.str();
}

std::string SimulationTrace::to_json_text() const {
  nlohmann::json doc;
  doc["dt"] = config.dt;
  doc["duration"] = config.duration;
  doc["ego_route"] = {ego_path.start(), ego_path.end()};
  doc["bv_route"] = {bv_path.start(), bv_path.end()};
  auto state = [](const VehicleState& v) {
    nlohmann::json j;
    j["active"] = v.active;
    j["s"] = v.s;
    j["x"] = v.x;
    j["y"] = v.y;
    j["heading"] = v.heading;
    j["speed"] = v.speed;
    j["accel"] = v.accel;
    return j;
  };
  doc["samples"] = nlohmann::json::array();
  for (const TraceSample& s : samples) {
    nlohmann::json j;
    j["t"] = s.t;
    j["ego"] = state(s.ego);
    j["bv"] = state(s.bv);
    j["signal_phase"] = s.signal_phase;
    j["gap"] = std::isinf(s.gap) ? nlohmann::json() : nlohmann::json(s.gap);
    doc["samples"].push_back(std::move(j));
  }
  doc["events"] = nlohmann::json::array();
  for (const TraceEvent& e : events) {
    doc["events"].push_back({{"t", e.t}, {"kind", e.kind}, {"actor", e.actor}});
  }
  return doc.dump(2);
}

}  // namespace scengen
