#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scengen {

// One logical crossroad scenario: routes between waypoint labels P1..P8,
// configured speeds, and the conflict point label C1..C4 its path pair
// produces. The ego_sim_speed_override, when present, replaces the configured
// ego speed during simulation unless a search vector supplies ego_speed.
struct LogicalScenario {
  std::string id;         // S1..S4
  std::string ego_start;  // P1..P8
  std::string ego_end;
  double ego_speed = 0.0;  // m/s
  std::string bv_start;
  std::string bv_end;
  double bv_speed = 0.0;  // m/s
  std::string conflict;   // C1..C4
  std::optional<double> ego_sim_speed_override;  // m/s
};

// The four built-in logical crossroad scenarios.
const std::vector<LogicalScenario>& scenario_catalog();

// Throws on unknown id.
LogicalScenario catalog_scenario(std::string_view id);

}  // namespace scengen
