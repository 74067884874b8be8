#include "scengen/catalog.hpp"

#include "scengen/errors.hpp"

namespace scengen {

const std::vector<LogicalScenario>& scenario_catalog() {
  // S4's ego slows to 2 m/s in simulation for a realistic merge interaction;
  // a search vector carrying ego_speed takes precedence over the override.
  static const std::vector<LogicalScenario> catalog = {
      {"S1", "P5", "P2", 6.9, "P3", "P8", 1.8, "C1", std::nullopt},
      {"S2", "P5", "P2", 6.9, "P1", "P4", 1.8, "C2", std::nullopt},
      {"S3", "P1", "P6", 6.9, "P7", "P2", 5.5, "C3", std::nullopt},
      {"S4", "P5", "P8", 6.9, "P3", "P8", 1.8, "C4", 2.0},
  };
  return catalog;
}

LogicalScenario catalog_scenario(std::string_view id) {
  for (const LogicalScenario& s : scenario_catalog()) {
    if (s.id == id) return s;
  }
  throw Error("unknown scenario id: '" + std::string(id) + "'");
}

}  // namespace scengen
