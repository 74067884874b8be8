#include <benchmark/benchmark.h>

#include "scengen/campaign.hpp"
#include "scengen/catalog.hpp"
#include "scengen/optimizers.hpp"
#include "scengen/pipeline.hpp"

using namespace scengen;

namespace {

SearchSpace cube3() {
  return SearchSpace::create({
      {"x0", Axis::kExtension, 5, 0.0, 1.0, ""},
      {"x1", Axis::kExtension, 5, 0.0, 1.0, ""},
      {"x2", Axis::kExtension, 5, 0.0, 1.0, ""},
  });
}

ObjectiveContract cheap_sphere() {
  ObjectiveContract contract;
  contract.arity = 1;
  contract.evaluate = [](const ScenarioVector& v) {
    double sum = 0.0;
    for (double x : v.values) sum += (x - 0.5) * (x - 0.5);
    return EvalOutput{{-sum}, {}};
  };
  return contract;
}

// Optimizer overhead on a trivial objective, whole campaign per iteration.
void BM_campaign(benchmark::State& state, const char* algorithm) {
  const auto space = cube3();
  const auto objective = cheap_sphere();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_optimizer(algorithm, space, objective, {25, 40}, OptimizerConfigs{}, 1));
  }
}
BENCHMARK_CAPTURE(BM_campaign, rs, "rs");
BENCHMARK_CAPTURE(BM_campaign, pso, "pso");
BENCHMARK_CAPTURE(BM_campaign, ga, "ga");
BENCHMARK_CAPTURE(BM_campaign, ppo, "ppo");

void BM_nsga2_campaign(benchmark::State& state) {
  const auto space = cube3();
  ObjectiveContract objective;
  objective.arity = 2;
  objective.evaluate = [](const ScenarioVector& v) {
    const double x = v.values[0];
    return EvalOutput{{x * x, (x - 1.0) * (x - 1.0)}, {}};
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsga2(space, objective, {25, 40}, Nsga2Config{}, 1));
  }
}
BENCHMARK(BM_nsga2_campaign);

// The production configuration: simulator-backed fitness on the crossroad.
void BM_s4_campaign_simulated(benchmark::State& state) {
  const auto map = build_crossroad(StaticMapSpec{});
  const auto space = SearchSpace::default_dynamic();
  const auto objective =
      make_single_objective(map, catalog_scenario("S4"), space, SimConfig{}, MetricConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        random_search(space, objective, {5, 40}, 1, /*parallel=*/true));
  }
}
BENCHMARK(BM_s4_campaign_simulated)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
