#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "scengen/search_space.hpp"

namespace scengen {

struct Budget {
  int iterations = 25;
  int population = 40;

  void validate() const {
    if (iterations < 1 || population < 1) throw Error("budget fields must be >= 1");
  }
};

struct PsoConfig {
  double c1 = 1.5;
  double c2 = 1.5;
  double inertia = 0.8;
  double velocity_clamp_fraction = 0.5;  // of each dimension's range
};

struct GaConfig {
  double crossover_prob = 0.7;
  double mutation_prob = 0.05;  // per variable
  double mutation_sigma_fraction = 0.1;
  double eta_crossover = 15.0;
};

struct PpoConfig {
  int k_epochs = 32;
  double gamma = 0.99;  // inert for one-step episodes; kept for interface parity
  double lr_actor = 0.0003;
  double lr_critic = 0.001;
  double clip_epsilon = 0.2;
  double initial_log_std = -1.15;
};

struct Nsga2Config {
  double crossover_prob = 0.7;
  double mutation_prob = 0.05;  // per variable
  double eta_crossover = 15.0;
  double eta_mutation = 20.0;
};

// One objective evaluation: the objective value(s) the optimizer consumes
// plus named side metrics (d_min, v_d, n_collision, ...) recorded for
// campaign statistics. Evaluations must be pure and deterministic.
struct EvalOutput {
  std::vector<double> objectives;
  std::map<std::string, double> metrics;
};

// Single-objective contracts are maximized (larger fitness = more critical);
// multi-objective contracts are minimized in every component.
struct ObjectiveContract {
  int arity = 1;
  std::function<EvalOutput(const ScenarioVector&)> evaluate;
};

struct Evaluation {
  ScenarioVector x;
  EvalOutput out;
  int iteration = 0;  // 1-based generation
};

// Full record of one optimization campaign. Every optimizer performs exactly
// iterations * population objective evaluations: the first iteration is the
// initial population (or first sample batch), each later iteration evaluates
// population new points. wall_seconds is measurement metadata and stays out
// of the canonical JSON so reruns are byte-identical.
struct CampaignReport {
  std::string algorithm;
  std::uint64_t seed = 0;
  Budget budget;
  std::vector<std::string> parameter_names;
  std::vector<Evaluation> evaluations;
  std::vector<double> best_history;  // per iteration, best-so-far (single-objective)
  std::vector<std::size_t> best_index_history;  // evaluation index of the best so far
  std::vector<std::vector<std::size_t>> generation_fronts;  // multi-objective
  std::vector<std::size_t> final_population;  // evaluation indices (population-based)
  std::vector<double> hv_history;      // archive-front hypervolume per generation
  std::vector<double> spread_history;  // generation-front spread (NaN below 3 points)
  std::map<std::string, double> diagnostics;  // algorithm internals (policy mean, ...)
  double wall_seconds = 0.0;
};

CampaignReport random_search(const SearchSpace& space, const ObjectiveContract& objective,
                             Budget budget, std::uint64_t seed, bool parallel = false);

CampaignReport pso(const SearchSpace& space, const ObjectiveContract& objective,
                   Budget budget, const PsoConfig& cfg, std::uint64_t seed,
                   bool parallel = false);

CampaignReport ga(const SearchSpace& space, const ObjectiveContract& objective,
                  Budget budget, const GaConfig& cfg, std::uint64_t seed,
                  bool parallel = false);

// One-step episodic policy search: a diagonal-Gaussian policy over the
// normalized unit cube emits `population` vectors per iteration; the clipped
// surrogate objective updates the policy mean/log-std for k_epochs per batch
// with a scalar value baseline.
CampaignReport ppo_search(const SearchSpace& space, const ObjectiveContract& objective,
                          Budget budget, const PpoConfig& cfg, std::uint64_t seed,
                          bool parallel = false);

CampaignReport nsga2(const SearchSpace& space, const ObjectiveContract& objective,
                     Budget budget, const Nsga2Config& cfg, std::uint64_t seed,
                     bool parallel = false);

// Dispatch by algorithm name: rs | pso | ga | ppo | nsga2.
struct OptimizerConfigs {
  PsoConfig pso;
  GaConfig ga;
  PpoConfig ppo;
  Nsga2Config nsga2;
};
CampaignReport run_optimizer(const std::string& algorithm, const SearchSpace& space,
                             const ObjectiveContract& objective, Budget budget,
                             const OptimizerConfigs& cfgs, std::uint64_t seed,
                             bool parallel = false);

}  // namespace scengen
