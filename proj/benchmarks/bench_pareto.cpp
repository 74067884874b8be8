#include <benchmark/benchmark.h>

#include "scengen/pareto.hpp"
#include "scengen/rng.hpp"

using namespace scengen;

namespace {

std::vector<ParetoPoint> random_points(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ParetoPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> objs(k);
    for (double& v : objs) v = rng.uniform01();
    points.push_back({std::move(objs), i});
  }
  return points;
}

void BM_non_dominated_sort(benchmark::State& state) {
  const auto points = random_points(state.range(0), 2, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(non_dominated_sort(points));
  }
}
BENCHMARK(BM_non_dominated_sort)->Arg(80)->Arg(400);

void BM_crowding_distance(benchmark::State& state) {
  const auto points = random_points(state.range(0), 2, 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crowding_distance(points));
  }
}
BENCHMARK(BM_crowding_distance)->Arg(40)->Arg(200);

void BM_hypervolume(benchmark::State& state) {
  auto points = random_points(state.range(0), 2, 44);
  for (auto& p : points) {
    p.objectives[0] *= 0.9;
    p.objectives[1] *= 0.9;
  }
  const std::vector<double> ref{1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypervolume(points, ref));
  }
}
BENCHMARK(BM_hypervolume)->Arg(40)->Arg(1000);

}  // namespace
