#include "scengen/pipeline.hpp"

#include <cmath>

#include "scengen/numeric.hpp"

namespace scengen {

std::map<std::string, double> evaluation_metrics(const MetricVector& mv,
                                                 const MetricConfig& cfg) {
  const double d_min = std::min(mv.d_min, cfg.d_min_cap);
  return {
      {"d_min", d_min},
      {"v_d", mv.v_d},
      {"n_collision", static_cast<double>(mv.n_collision)},
      {"ttc_min", mv.ttc_min},
      {"fitness", fitness(mv, cfg.weights, cfg.fitness_form)},
      {"critical",
       classify_critical(mv, cfg.thresholds, cfg.critical_rule) ? 1.0 : 0.0},
  };
}

ScenarioVector default_vector(const SearchSpace& space, const LogicalScenario& logical,
                              const std::map<std::string, double>& named_values) {
  std::map<std::string, double> named;
  for (const ParameterSpec& p : space.specs()) {
    double value = 0.5 * (p.lower + p.upper);
    if (p.name == "bv_speed") value = logical.bv_speed;
    else if (p.name == "ego_speed")
      value = logical.ego_sim_speed_override ? *logical.ego_sim_speed_override
                                             : logical.ego_speed;
    else if (p.name == "bv_spawn_delay" || p.name == "ego_spawn_offset") value = 0.0;
    else if (p.name == "fog_density" || p.name == "precipitation_intensity" ||
             p.name == "wetness" || p.name == "cloud_cover" || p.name == "wind_speed")
      value = 0.0;
    else if (p.name == "sun_altitude") value = 50.0;
    auto it = named_values.find(p.name);
    if (it != named_values.end()) value = it->second;
    named[p.name] = value;
  }
  return clamp_to_bounds(space, encode(space, named));
}

namespace {

MetricVector evaluate_scenario(const CrossroadMap& map, const LogicalScenario& logical,
                               const SearchSpace& space, const SimConfig& sim_cfg,
                               const MetricConfig& metric_cfg, const ScenarioVector& v) {
  const ScenarioVector clamped = clamp_to_bounds(space, v);
  const SimulationTrace trace = simulate(map, logical, space, clamped, sim_cfg);
  MetricVector mv = compute_metrics(trace);
  mv.d_min = std::min(mv.d_min, metric_cfg.d_min_cap);
  return mv;
}

}  // namespace

ObjectiveContract make_single_objective(const CrossroadMap& map,
                                        const LogicalScenario& logical,
                                        const SearchSpace& space, const SimConfig& sim_cfg,
                                        const MetricConfig& metric_cfg) {
  ObjectiveContract contract;
  contract.arity = 1;
  contract.evaluate = [=](const ScenarioVector& v) {
    const MetricVector mv =
        evaluate_scenario(map, logical, space, sim_cfg, metric_cfg, v);
    EvalOutput out;
    out.metrics = evaluation_metrics(mv, metric_cfg);
    out.objectives = {out.metrics.at("fitness")};
    return out;
  };
  return contract;
}

ObjectiveContract make_multi_objective(const CrossroadMap& map,
                                       const LogicalScenario& logical,
                                       const SearchSpace& space, const SimConfig& sim_cfg,
                                       const MetricConfig& metric_cfg) {
  ObjectiveContract contract;
  contract.arity = 2;
  contract.evaluate = [=](const ScenarioVector& v) {
    const MetricVector mv =
        evaluate_scenario(map, logical, space, sim_cfg, metric_cfg, v);
    EvalOutput out;
    out.metrics = evaluation_metrics(mv, metric_cfg);
    out.objectives = {out.metrics.at("d_min"), -out.metrics.at("v_d")};
    return out;
  };
  return contract;
}

}  // namespace scengen
