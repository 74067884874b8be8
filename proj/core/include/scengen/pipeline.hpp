#pragma once

#include "scengen/catalog.hpp"
#include "scengen/crossroad.hpp"
#include "scengen/metrics.hpp"
#include "scengen/optimizers.hpp"
#include "scengen/simulator.hpp"

namespace scengen {

struct MetricConfig {
  MetricWeights weights = default_fitness_weights();
  FitnessForm fitness_form = FitnessForm::kSigned;
  Thresholds thresholds;
  CriticalRule critical_rule = CriticalRule::kCollisionOrNearMiss;
  // Finite stand-in for an infinite d_min (vehicles never co-active) so
  // objective values and normalization stay finite.
  double d_min_cap = 200.0;
};

// Metrics a campaign records per evaluation, with d_min capped.
std::map<std::string, double> evaluation_metrics(const MetricVector& mv,
                                                 const MetricConfig& cfg);

// Canonical single-run vector for a logical scenario: catalog speeds (the
// simulation override winning where present), zero delay/offset, neutral
// weather, midpoint for anything else. named_values override individual
// entries; the result is clamped to the space bounds.
ScenarioVector default_vector(const SearchSpace& space, const LogicalScenario& logical,
                              const std::map<std::string, double>& named_values = {});

// Single-objective contract over the simulator: maximize the scalar fitness.
ObjectiveContract make_single_objective(const CrossroadMap& map,
                                        const LogicalScenario& logical,
                                        const SearchSpace& space, const SimConfig& sim_cfg,
                                        const MetricConfig& metric_cfg);

// Bi-objective contract: minimize (d_min, -v_d).
ObjectiveContract make_multi_objective(const CrossroadMap& map,
                                       const LogicalScenario& logical,
                                       const SearchSpace& space, const SimConfig& sim_cfg,
                                       const MetricConfig& metric_cfg);

}  // namespace scengen
