#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scengen/constraints.hpp"
#include "scengen/crossroad.hpp"
#include "scengen/ontology.hpp"
#include "scengen/openx.hpp"
#include "scengen/optimizers.hpp"
#include "scengen/pipeline.hpp"
#include "scengen/simulator.hpp"
#include "scengen/weighting.hpp"

namespace scengen {

// One JSON config document drives every command; flags override file values.
// All sections are optional and default to the crossroad experiment setup.
struct RunConfig {
  std::string scenario = "S4";
  SearchSpace space = SearchSpace::default_dynamic();
  std::map<std::string, double> named_values;  // single-run parameter overrides

  StaticMapSpec map;
  double waypoint_setback = 40.0;
  std::optional<SignalTiming> signal;

  ConstraintConfig constraints;
  SimConfig sim;
  MetricConfig metrics;

  std::string algorithm = "rs";
  Budget budget;
  OptimizerConfigs optimizers;
  bool parallel = false;
  std::vector<std::string> campaign_algorithms;  // comparison mode when non-empty

  EmitterOptions emitter;
  std::string ontology_extensions;  // JSON class/property declarations, optional
  TriggerSpec trigger;
  std::uint64_t seed = 42;
  std::string out_dir = "out";
  double report_speed_factor = 1.0;  // printed speeds only; 3.6 for km/h

  // validate-command inputs (weather/placements/participants sections).
  ScenarioState validation_state;

  static RunConfig from_json_text(std::string_view text);
  static RunConfig from_file(const std::string& path);
};

// CSV of metric samples: header names carry a '+'/'-' direction suffix
// (benefit/cost), one row per scenario.
struct MetricSamples {
  std::vector<std::string> names;
  std::vector<Direction> directions;
  std::vector<std::vector<double>> rows;
};
MetricSamples parse_metric_samples_csv(std::string_view text);

// Weights JSON: {"names": [...], "weights": [...], "directions": ["cost"|"benefit"...]}.
std::string weights_to_json(const MetricWeights& weights);
MetricWeights weights_from_json_text(std::string_view text);

}  // namespace scengen
