#include <benchmark/benchmark.h>

#include "scengen/catalog.hpp"
#include "scengen/metrics.hpp"
#include "scengen/pipeline.hpp"
#include "scengen/simulator.hpp"

using namespace scengen;

namespace {

const CrossroadMap& crossroad() {
  static const CrossroadMap map = build_crossroad(StaticMapSpec{});
  return map;
}

void BM_build_crossroad(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_crossroad(StaticMapSpec{}));
  }
}
BENCHMARK(BM_build_crossroad);

void BM_plan_turn_path(benchmark::State& state) {
  const auto& map = crossroad();
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_path(map, "P5", "P8"));
  }
}
BENCHMARK(BM_plan_turn_path);

void BM_simulate_episode(benchmark::State& state) {
  const auto& map = crossroad();
  const auto space = SearchSpace::default_dynamic();
  const auto logical = catalog_scenario(state.range(0) == 0 ? "S1" : "S4");
  const auto v = encode(space, {{"bv_speed", 4.0},
                                {"bv_spawn_delay", 1.0},
                                {"ego_speed", 6.9},
                                {"ego_spawn_offset", 2.0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(map, logical, space, v));
  }
}
BENCHMARK(BM_simulate_episode)->Arg(0)->Arg(1);

void BM_simulate_and_score(benchmark::State& state) {
  const auto& map = crossroad();
  const auto space = SearchSpace::default_dynamic();
  const auto objective =
      make_single_objective(map, catalog_scenario("S4"), space, SimConfig{}, MetricConfig{});
  const auto v = encode(space, {{"bv_speed", 2.4},
                                {"bv_spawn_delay", 0.5},
                                {"ego_speed", 5.0},
                                {"ego_spawn_offset", 0.0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective.evaluate(v));
  }
}
BENCHMARK(BM_simulate_and_score);

}  // namespace
