#include <doctest.h>

#include <cmath>

#include "scengen/campaign.hpp"
#include "scengen/optimizers.hpp"
#include "scengen/pareto.hpp"
#include "scengen/rng.hpp"

using namespace scengen;

namespace {

SearchSpace unit_cube(int dims) {
  std::vector<ParameterSpec> specs;
  for (int d = 0; d < dims; ++d) {
    specs.push_back({"x" + std::to_string(d), Axis::kExtension, 5, 0.0, 1.0, ""});
  }
  return SearchSpace::create(specs);
}

// Maximization benchmark: peak 0 at the given center.
ObjectiveContract sphere(std::vector<double> center) {
  ObjectiveContract contract;
  contract.arity = 1;
  contract.evaluate = [center = std::move(center)](const ScenarioVector& v) {
    double sum = 0.0;
    for (std::size_t d = 0; d < v.values.size(); ++d) {
      const double delta = v.values[d] - center[d];
      sum += delta * delta;
    }
    return EvalOutput{{-sum}, {}};
  };
  return contract;
}

ObjectiveContract bi_objective_toy() {
  ObjectiveContract contract;
  contract.arity = 2;
  contract.evaluate = [](const ScenarioVector& v) {
    const double x = v.values[0];
    return EvalOutput{{x * x, (x - 1.0) * (x - 1.0)}, {}};
  };
  return contract;
}

const ScenarioVector& best_vector(const CampaignReport& report) {
  return report.evaluations[report.best_index_history.back()].x;
}

}  // namespace

TEST_CASE("rng streams are independent of parent draws and statistically sane") {
  Rng parent(99);
  const Rng fork_before = parent.fork(3, 7);
  for (int i = 0; i < 1000; ++i) parent.uniform01();
  Rng fork_after = parent.fork(3, 7);
  Rng fork_copy = fork_before;
  for (int i = 0; i < 100; ++i) {
    CHECK(fork_copy.next_u64() == fork_after.next_u64());
  }

  Rng rng(5);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double variance = sum_sq / n - mean * mean;
  CHECK(std::fabs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(variance == doctest::Approx(1.0).epsilon(0.05));

  Rng u(6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform01();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("random search with a 1x1 budget returns its single sample") {
  const auto space = unit_cube(2);
  const auto report = random_search(space, sphere({0.5, 0.5}), {1, 1}, 7);
  CHECK(report.evaluations.size() == 1);
  CHECK(report.best_history.size() == 1);
  CHECK(report.best_history[0] == report.evaluations[0].out.objectives[0]);
}

TEST_CASE("random search is deterministic per seed") {
  const auto space = unit_cube(3);
  const auto a = random_search(space, sphere({0.2, 0.8, 0.5}), {5, 8}, 99);
  const auto b = random_search(space, sphere({0.2, 0.8, 0.5}), {5, 8}, 99);
  CHECK(report_to_json(a) == report_to_json(b));
  const auto c = random_search(space, sphere({0.2, 0.8, 0.5}), {5, 8}, 100);
  CHECK(report_to_json(a) != report_to_json(c));
}

TEST_CASE("random search samples uniformly within bounds") {
  auto space = SearchSpace::create({
      {"a", Axis::kExtension, 5, -2.0, 4.0, ""},
      {"b", Axis::kExtension, 5, 10.0, 30.0, ""},
  });
  const auto report = random_search(space, sphere({0.0, 0.0}), {25, 40}, 4);
  REQUIRE(report.evaluations.size() == 1000);
  for (std::size_t d = 0; d < 2; ++d) {
    double mean = 0.0;
    const double lo = space.spec(d).lower, hi = space.spec(d).upper;
    for (const auto& e : report.evaluations) {
      CHECK(e.x.values[d] >= lo);
      CHECK(e.x.values[d] <= hi);
      mean += e.x.values[d];
    }
    mean /= 1000.0;
    const double sigma = (hi - lo) / std::sqrt(12.0 * 1000.0);
    CHECK(std::fabs(mean - 0.5 * (lo + hi)) <= 3.0 * sigma);
  }
}

TEST_CASE("pso finds the sphere optimum") {
  const auto space = unit_cube(3);
  const std::vector<double> center = {0.3, 0.7, 0.5};
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const auto report = pso(space, sphere(center), {25, 40}, PsoConfig{}, seed);
    CHECK(report.evaluations.size() == 1000);
    const auto& best = best_vector(report);
    double dist = 0.0;
    for (int d = 0; d < 3; ++d) {
      dist += (best.values[d] - center[d]) * (best.values[d] - center[d]);
    }
    CHECK(std::sqrt(dist) <= 0.05);
  }
}

TEST_CASE("best-so-far histories never degrade") {
  const auto space = unit_cube(2);
  for (const auto& report :
       {random_search(space, sphere({0.1, 0.9}), {10, 10}, 3),
        pso(space, sphere({0.1, 0.9}), {10, 10}, PsoConfig{}, 3),
        ga(space, sphere({0.1, 0.9}), {10, 10}, GaConfig{}, 3),
        ppo_search(space, sphere({0.1, 0.9}), {10, 10}, PpoConfig{}, 3)}) {
    REQUIRE(report.best_history.size() == 10);
    for (std::size_t i = 1; i < report.best_history.size(); ++i) {
      CHECK(report.best_history[i] >= report.best_history[i - 1]);
    }
  }
}

TEST_CASE("frozen pso stays at its initial positions") {
  const auto space = unit_cube(2);
  PsoConfig frozen;
  frozen.inertia = 0.0;
  frozen.c1 = 0.0;
  frozen.c2 = 0.0;
  const auto report = pso(space, sphere({0.5, 0.5}), {4, 6}, frozen, 11);
  for (int i = 0; i < 6; ++i) {
    const auto& first = report.evaluations[i].x.values;
    for (int iter = 1; iter < 4; ++iter) {
      CHECK(report.evaluations[iter * 6 + i].x.values == first);
    }
  }
}

TEST_CASE("ga converges on the sphere and never degrades without variation") {
  const auto space = unit_cube(3);
  const std::vector<double> center = {0.4, 0.2, 0.9};
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const auto report = ga(space, sphere(center), {25, 40}, GaConfig{}, seed);
    CHECK(report.evaluations.size() == 1000);
    const auto& best = best_vector(report);
    double dist = 0.0;
    for (int d = 0; d < 3; ++d) {
      dist += (best.values[d] - center[d]) * (best.values[d] - center[d]);
    }
    CHECK(std::sqrt(dist) <= 0.1);
  }

  GaConfig still;
  still.crossover_prob = 0.0;
  still.mutation_prob = 0.0;
  const auto frozen = ga(space, sphere(center), {10, 10}, still, 5);
  for (std::size_t i = 1; i < frozen.best_history.size(); ++i) {
    CHECK(frozen.best_history[i] >= frozen.best_history[i - 1]);
  }

  const auto a = ga(space, sphere(center), {5, 6}, GaConfig{}, 21);
  const auto b = ga(space, sphere(center), {5, 6}, GaConfig{}, 21);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("ppo policy concentrates near the bandit optimum") {
  const auto space = unit_cube(1);
  ObjectiveContract bandit;
  bandit.arity = 1;
  bandit.evaluate = [](const ScenarioVector& v) {
    const double x = v.values[0];
    return EvalOutput{{-(x - 0.7) * (x - 0.7)}, {}};
  };
  int close = 0;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const auto report = ppo_search(space, bandit, {25, 40}, PpoConfig{}, seed);
    CHECK(report.evaluations.size() == 1000);
    const double mean = report.diagnostics.at("policy_mean_0");
    if (std::fabs(mean - 0.7) <= 0.1) ++close;
  }
  CHECK(close >= 4);
}

TEST_CASE("zero clip width freezes the ppo policy") {
  const auto space = unit_cube(2);
  PpoConfig cfg;
  cfg.clip_epsilon = 0.0;
  const auto report = ppo_search(space, sphere({0.5, 0.5}), {3, 8}, cfg, 13);
  CHECK(report.diagnostics.at("policy_mean_0") == 0.5);
  CHECK(report.diagnostics.at("policy_mean_1") == 0.5);
  CHECK(report.diagnostics.at("policy_log_std_0") == cfg.initial_log_std);
  CHECK(report.diagnostics.at("policy_log_std_1") == cfg.initial_log_std);
}

TEST_CASE("ppo is deterministic per seed") {
  const auto space = unit_cube(2);
  const auto a = ppo_search(space, sphere({0.6, 0.4}), {6, 10}, PpoConfig{}, 77);
  const auto b = ppo_search(space, sphere({0.6, 0.4}), {6, 10}, PpoConfig{}, 77);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("nsga2 final front is mutually non-dominated and matches brute force") {
  const auto space = unit_cube(1);
  const auto report = nsga2(space, bi_objective_toy(), {15, 24}, Nsga2Config{}, 3);
  CHECK(report.evaluations.size() == 15 * 24);
  REQUIRE(!report.generation_fronts.empty());
  REQUIRE(!report.final_population.empty());

  std::vector<ParetoPoint> final_pop;
  for (std::size_t idx : report.final_population) {
    final_pop.push_back({report.evaluations[idx].out.objectives, idx});
  }
  std::vector<std::size_t> brute;
  for (std::size_t i : non_dominated_filter(final_pop)) {
    brute.push_back(final_pop[i].payload);
  }
  std::vector<std::size_t> front = report.generation_fronts.back();
  std::sort(front.begin(), front.end());
  std::sort(brute.begin(), brute.end());
  // Duplicated points can appear in both sets; compare as sets of objectives.
  CHECK(front == brute);

  for (std::size_t a : report.generation_fronts.back()) {
    for (std::size_t b : report.generation_fronts.back()) {
      if (a == b) continue;
      CHECK(!dominates(report.evaluations[a].out.objectives,
                       report.evaluations[b].out.objectives));
    }
  }
}

TEST_CASE("nsga2 approximates the analytic front of the convex toy") {
  const auto space = unit_cube(1);
  const auto report = nsga2(space, bi_objective_toy(), {25, 40}, Nsga2Config{}, 5);

  // Dense sampling of the true front (x in [0,1]) for the reference volume.
  std::vector<ParetoPoint> truth;
  for (int i = 0; i <= 20000; ++i) {
    const double x = i / 20000.0;
    truth.push_back({{x * x, (x - 1.0) * (x - 1.0)}, 0});
  }
  const double truth_hv = hypervolume(truth, {1.1, 1.1});

  std::vector<ParetoPoint> front;
  for (std::size_t idx : report.generation_fronts.back()) {
    front.push_back({report.evaluations[idx].out.objectives, idx});
  }
  const double front_hv = hypervolume(front, {1.1, 1.1});
  CHECK(front_hv >= 0.95 * truth_hv);
  CHECK(front_hv <= truth_hv + 1e-9);
}

TEST_CASE("nsga2 archive hypervolume history is non-decreasing") {
  const auto space = unit_cube(1);
  const auto report = nsga2(space, bi_objective_toy(), {12, 16}, Nsga2Config{}, 9);
  REQUIRE(report.hv_history.size() == 12);
  for (std::size_t g = 1; g < report.hv_history.size(); ++g) {
    CHECK(report.hv_history[g] >= report.hv_history[g - 1] - 1e-12);
  }
  CHECK(report.spread_history.size() == 12);
}

TEST_CASE("single-objective contracts are rejected by nsga2 and vice versa") {
  const auto space = unit_cube(1);
  CHECK_THROWS_AS(nsga2(space, sphere({0.5}), {2, 4}, Nsga2Config{}, 1), Error);
  CHECK_THROWS_AS(pso(space, bi_objective_toy(), {2, 4}, PsoConfig{}, 1), Error);
  CHECK_THROWS_AS(ga(space, bi_objective_toy(), {2, 4}, GaConfig{}, 1), Error);
  CHECK_THROWS_AS(ppo_search(space, bi_objective_toy(), {2, 4}, PpoConfig{}, 1), Error);
}

TEST_CASE("every optimizer spends exactly its evaluation budget") {
  const auto space = unit_cube(2);
  const Budget budget{7, 9};
  CHECK(random_search(space, sphere({0.5, 0.5}), budget, 1).evaluations.size() == 63);
  CHECK(pso(space, sphere({0.5, 0.5}), budget, PsoConfig{}, 1).evaluations.size() == 63);
  CHECK(ga(space, sphere({0.5, 0.5}), budget, GaConfig{}, 1).evaluations.size() == 63);
  CHECK(ppo_search(space, sphere({0.5, 0.5}), budget, PpoConfig{}, 1).evaluations.size() == 63);
  CHECK(nsga2(space, bi_objective_toy(), budget, Nsga2Config{}, 1).evaluations.size() == 63);
}

TEST_CASE("parallel evaluation produces the identical report") {
  const auto space = unit_cube(3);
  for (const char* algorithm : {"rs", "pso", "ga", "ppo"}) {
    const auto seq = run_optimizer(algorithm, space, sphere({0.2, 0.5, 0.9}), {6, 12},
                                   OptimizerConfigs{}, 31, false);
    const auto par = run_optimizer(algorithm, space, sphere({0.2, 0.5, 0.9}), {6, 12},
                                   OptimizerConfigs{}, 31, true);
    CHECK(report_to_json(seq) == report_to_json(par));
  }
  const auto seq = nsga2(space, bi_objective_toy(), {6, 12}, Nsga2Config{}, 31, false);
  const auto par = nsga2(space, bi_objective_toy(), {6, 12}, Nsga2Config{}, 31, true);
  CHECK(report_to_json(seq) == report_to_json(par));
}

TEST_CASE("unknown optimizer names are rejected") {
  const auto space = unit_cube(1);
  CHECK_THROWS_AS(
      run_optimizer("annealing", space, sphere({0.5}), {2, 2}, OptimizerConfigs{}, 1),
      Error);
}
