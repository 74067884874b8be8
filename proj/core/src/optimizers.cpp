#include "scengen/optimizers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "scengen/numeric.hpp"
#include "scengen/pareto.hpp"
#include "scengen/rng.hpp"

namespace scengen {

namespace {

using Clock = std::chrono::steady_clock;

void require_arity(const ObjectiveContract& objective, int arity, const char* algorithm) {
  if (arity == 1 ? objective.arity != 1 : objective.arity < 2) {
    throw Error(std::string(algorithm) + ": objective arity mismatch");
  }
}

// Deterministic batch evaluation: outputs land by index, so parallel and
// sequential execution produce identical reports.
std::vector<EvalOutput> evaluate_batch(const ObjectiveContract& objective,
                                       const std::vector<ScenarioVector>& xs,
                                       bool parallel) {
  std::vector<EvalOutput> outs(xs.size());
  if (!parallel || xs.size() < 2) {
    for (std::size_t i = 0; i < xs.size(); ++i) outs[i] = objective.evaluate(xs[i]);
    return outs;
  }
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(xs.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < xs.size();) {
        outs[i] = objective.evaluate(xs[i]);
      }
    });
  }
  for (auto& th : pool) th.join();
  return outs;
}

ScenarioVector uniform_sample(const SearchSpace& space, Rng rng) {
  ScenarioVector v;
  v.values.reserve(space.dimension());
  for (const ParameterSpec& p : space.specs()) {
    v.values.push_back(rng.uniform(p.lower, p.upper));
  }
  return v;
}

void record_batch(CampaignReport& report, const std::vector<ScenarioVector>& xs,
                  std::vector<EvalOutput> outs, int iteration) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    report.evaluations.push_back({xs[i], std::move(outs[i]), iteration});
  }
}

// Running best of objective[0] under maximization, appended once per iteration.
void update_best_history(CampaignReport& report) {
  double best = -kInf;
  std::size_t best_index = 0;
  if (!report.best_history.empty()) {
    best = report.best_history.back();
    best_index = report.best_index_history.back();
  }
  for (std::size_t i = report.best_index_history.empty()
                           ? 0
                           : (report.evaluations.size() -
                              static_cast<std::size_t>(report.budget.population));
       i < report.evaluations.size(); ++i) {
    const double f = report.evaluations[i].out.objectives.at(0);
    if (f > best) {
      best = f;
      best_index = i;
    }
  }
  report.best_history.push_back(best);
  report.best_index_history.push_back(best_index);
}

// Multi-objective bookkeeping shared by nsga2 and multi-objective random
// search: per-generation fronts plus archive hypervolume / front spread
// histories, normalized over the final archive so the curves are comparable
// across generations. Reference point (1.1, 1.1) in normalized space.
void finalize_multi(CampaignReport& report) {
  if (report.generation_fronts.empty() || report.evaluations.empty()) return;
  const std::size_t k = report.evaluations.front().out.objectives.size();
  if (k != 2) return;  // indicator histories are defined for the 2-objective case

  std::vector<double> lo(k, kInf), hi(k, -kInf);
  for (const Evaluation& e : report.evaluations) {
    for (std::size_t m = 0; m < k; ++m) {
      lo[m] = std::min(lo[m], e.out.objectives[m]);
      hi[m] = std::max(hi[m], e.out.objectives[m]);
    }
  }
  auto normalize = [&](const std::vector<double>& obj) {
    std::vector<double> out(k);
    for (std::size_t m = 0; m < k; ++m) {
      out[m] = hi[m] > lo[m] ? (obj[m] - lo[m]) / (hi[m] - lo[m]) : 0.0;
    }
    return out;
  };
  const std::vector<double> reference{1.1, 1.1};

  report.hv_history.clear();
  report.spread_history.clear();
  std::size_t seen = 0;
  std::vector<ParetoPoint> archive;
  for (std::size_t g = 0; g < report.generation_fronts.size(); ++g) {
    const std::size_t until =
        std::min(report.evaluations.size(),
                 (g + 1) * static_cast<std::size_t>(report.budget.population));
    for (; seen < until; ++seen) {
      archive.push_back({normalize(report.evaluations[seen].out.objectives), seen});
    }
    std::vector<ParetoPoint> front;
    for (std::size_t idx : non_dominated_filter(archive)) front.push_back(archive[idx]);
    report.hv_history.push_back(hypervolume(front, reference));

    std::vector<ParetoPoint> gen_front;
    for (std::size_t idx : report.generation_fronts[g]) {
      gen_front.push_back({normalize(report.evaluations[idx].out.objectives), idx});
    }
    report.spread_history.push_back(
        gen_front.size() >= 3 ? spread(gen_front) : std::nan(""));
  }
}

}  // namespace

CampaignReport random_search(const SearchSpace& space, const ObjectiveContract& objective,
                             Budget budget, std::uint64_t seed, bool parallel) {
  budget.validate();
  const auto t0 = Clock::now();
  const Rng root(seed);

  CampaignReport report;
  report.algorithm = "rs";
  report.seed = seed;
  report.budget = budget;
  for (const ParameterSpec& p : space.specs()) report.parameter_names.push_back(p.name);

  for (int iter = 1; iter <= budget.iterations; ++iter) {
    std::vector<ScenarioVector> xs;
    xs.reserve(budget.population);
    for (int i = 0; i < budget.population; ++i) {
      xs.push_back(uniform_sample(space, root.fork(iter, i)));
    }
    record_batch(report, xs, evaluate_batch(objective, xs, parallel), iter);
    if (objective.arity == 1) {
      update_best_history(report);
    } else {
      std::vector<ParetoPoint> all;
      for (std::size_t i = 0; i < report.evaluations.size(); ++i) {
        all.push_back({report.evaluations[i].out.objectives, i});
      }
      report.generation_fronts.push_back(non_dominated_filter(all));
    }
  }
  if (objective.arity > 1) finalize_multi(report);
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

CampaignReport pso(const SearchSpace& space, const ObjectiveContract& objective,
                   Budget budget, const PsoConfig& cfg, std::uint64_t seed, bool parallel) {
  budget.validate();
  require_arity(objective, 1, "pso");
  if (cfg.c1 < 0.0 || cfg.c2 < 0.0) throw Error("pso coefficients must be non-negative");
  const auto t0 = Clock::now();
  const Rng root(seed);
  const std::size_t n = space.dimension();
  const int pop = budget.population;

  CampaignReport report;
  report.algorithm = "pso";
  report.seed = seed;
  report.budget = budget;
  for (const ParameterSpec& p : space.specs()) report.parameter_names.push_back(p.name);

  std::vector<ScenarioVector> xs;
  for (int i = 0; i < pop; ++i) xs.push_back(uniform_sample(space, root.fork(1, i)));
  std::vector<std::vector<double>> velocity(pop, std::vector<double>(n, 0.0));
  auto outs = evaluate_batch(objective, xs, parallel);

  std::vector<ScenarioVector> pbest_x = xs;
  std::vector<double> pbest_f(pop);
  for (int i = 0; i < pop; ++i) pbest_f[i] = outs[i].objectives.at(0);
  std::size_t gbest = 0;
  for (int i = 1; i < pop; ++i) {
    if (pbest_f[i] > pbest_f[gbest]) gbest = i;
  }
  record_batch(report, xs, std::move(outs), 1);
  update_best_history(report);

  for (int iter = 2; iter <= budget.iterations; ++iter) {
    for (int i = 0; i < pop; ++i) {
      Rng rng = root.fork(iter, i);
      for (std::size_t d = 0; d < n; ++d) {
        const ParameterSpec& p = space.spec(d);
        const double range = p.upper - p.lower;
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double v = cfg.inertia * velocity[i][d] +
                   cfg.c1 * r1 * (pbest_x[i].values[d] - xs[i].values[d]) +
                   cfg.c2 * r2 * (pbest_x[gbest].values[d] - xs[i].values[d]);
        const double vmax = cfg.velocity_clamp_fraction * range;
        v = clamp(v, -vmax, vmax);
        velocity[i][d] = v;
        xs[i].values[d] = clamp(xs[i].values[d] + v, p.lower, p.upper);
      }
    }
    outs = evaluate_batch(objective, xs, parallel);
    for (int i = 0; i < pop; ++i) {
      const double f = outs[i].objectives.at(0);
      if (f > pbest_f[i]) {
        pbest_f[i] = f;
        pbest_x[i] = xs[i];
      }
    }
    for (int i = 0; i < pop; ++i) {
      if (pbest_f[i] > pbest_f[gbest]) gbest = i;
    }
    record_batch(report, xs, std::move(outs), iter);
    update_best_history(report);
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

namespace {

double sbx_child(double p1, double p2, double eta, double lo, double hi, Rng& rng) {
  const double u = rng.uniform01();
  const double beta = u <= 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0))
                               : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
  const double c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
  const double c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2);
  return clamp(rng.uniform01() < 0.5 ? c1 : c2, lo, hi);
}

double polynomial_mutation(double x, double eta, double lo, double hi, Rng& rng) {
  const double u = rng.uniform01();
  const double delta = u < 0.5 ? std::pow(2.0 * u, 1.0 / (eta + 1.0)) - 1.0
                               : 1.0 - std::pow(2.0 * (1.0 - u), 1.0 / (eta + 1.0));
  return clamp(x + delta * (hi - lo), lo, hi);
}

}  // namespace

CampaignReport ga(const SearchSpace& space, const ObjectiveContract& objective,
                  Budget budget, const GaConfig& cfg, std::uint64_t seed, bool parallel) {
  budget.validate();
  require_arity(objective, 1, "ga");
  const auto t0 = Clock::now();
  const Rng root(seed);
  const std::size_t n = space.dimension();
  const int pop = budget.population;

  CampaignReport report;
  report.algorithm = "ga";
  report.seed = seed;
  report.budget = budget;
  for (const ParameterSpec& p : space.specs()) report.parameter_names.push_back(p.name);

  std::vector<ScenarioVector> xs;
  for (int i = 0; i < pop; ++i) xs.push_back(uniform_sample(space, root.fork(1, i)));
  auto outs = evaluate_batch(objective, xs, parallel);
  std::vector<double> fitness_of(pop);
  for (int i = 0; i < pop; ++i) fitness_of[i] = outs[i].objectives.at(0);
  record_batch(report, xs, std::move(outs), 1);
  update_best_history(report);

  for (int iter = 2; iter <= budget.iterations; ++iter) {
    // Elite of the current population, kept with its known fitness.
    int elite = 0;
    for (int i = 1; i < pop; ++i) {
      if (fitness_of[i] > fitness_of[elite]) elite = i;
    }
    const ScenarioVector elite_x = xs[elite];
    const double elite_f = fitness_of[elite];

    std::vector<ScenarioVector> offspring(pop);
    for (int i = 0; i < pop; ++i) {
      Rng rng = root.fork(iter, i);
      auto tournament = [&]() -> int {
        const int a = static_cast<int>(rng.uniform_index(pop));
        const int b = static_cast<int>(rng.uniform_index(pop));
        return fitness_of[a] >= fitness_of[b] ? a : b;
      };
      const int pa = tournament();
      const int pb = tournament();
      ScenarioVector child = xs[pa];
      if (rng.uniform01() < cfg.crossover_prob) {
        for (std::size_t d = 0; d < n; ++d) {
          const ParameterSpec& p = space.spec(d);
          child.values[d] = sbx_child(xs[pa].values[d], xs[pb].values[d], cfg.eta_crossover,
                                      p.lower, p.upper, rng);
        }
      }
      for (std::size_t d = 0; d < n; ++d) {
        if (rng.uniform01() < cfg.mutation_prob) {
          const ParameterSpec& p = space.spec(d);
          child.values[d] =
              clamp(child.values[d] +
                        cfg.mutation_sigma_fraction * (p.upper - p.lower) * rng.normal(),
                    p.lower, p.upper);
        }
      }
      offspring[i] = std::move(child);
    }

    outs = evaluate_batch(objective, offspring, parallel);
    std::vector<double> offspring_f(pop);
    for (int i = 0; i < pop; ++i) offspring_f[i] = outs[i].objectives.at(0);
    record_batch(report, offspring, std::move(outs), iter);
    update_best_history(report);

    // Elitism of one: the previous elite replaces the worst offspring unless
    // an offspring already matches it.
    int worst = 0, best = 0;
    for (int i = 1; i < pop; ++i) {
      if (offspring_f[i] < offspring_f[worst]) worst = i;
      if (offspring_f[i] > offspring_f[best]) best = i;
    }
    if (offspring_f[best] < elite_f) {
      offspring[worst] = elite_x;
      offspring_f[worst] = elite_f;
    }
    xs = std::move(offspring);
    fitness_of = std::move(offspring_f);
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

CampaignReport ppo_search(const SearchSpace& space, const ObjectiveContract& objective,
                          Budget budget, const PpoConfig& cfg, std::uint64_t seed,
                          bool parallel) {
  budget.validate();
  require_arity(objective, 1, "ppo");
  if (cfg.lr_actor <= 0.0 || cfg.lr_critic <= 0.0) throw Error("ppo learning rates must be > 0");
  if (cfg.clip_epsilon < 0.0 || cfg.clip_epsilon >= 1.0) {
    throw Error("ppo clip epsilon must lie in [0,1)");
  }
  const auto t0 = Clock::now();
  const Rng root(seed);
  const std::size_t n = space.dimension();
  const int pop = budget.population;

  CampaignReport report;
  report.algorithm = "ppo";
  report.seed = seed;
  report.budget = budget;
  for (const ParameterSpec& p : space.specs()) report.parameter_names.push_back(p.name);

  std::vector<double> mu(n, 0.5);
  std::vector<double> log_std(n, cfg.initial_log_std);
  double baseline = 0.0;
  bool baseline_primed = false;

  // Hand-rolled Adam per parameter block.
  struct Adam {
    std::vector<double> m, v;
    int t = 0;
    explicit Adam(std::size_t size) : m(size, 0.0), v(size, 0.0) {}
    void step(std::vector<double>& params, const std::vector<double>& grad, double lr) {
      ++t;
      const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
      for (std::size_t i = 0; i < params.size(); ++i) {
        m[i] = b1 * m[i] + (1.0 - b1) * grad[i];
        v[i] = b2 * v[i] + (1.0 - b2) * grad[i] * grad[i];
        const double mh = m[i] / (1.0 - std::pow(b1, t));
        const double vh = v[i] / (1.0 - std::pow(b2, t));
        params[i] += lr * mh / (std::sqrt(vh) + eps);
      }
    }
  };
  Adam actor_opt(2 * n);
  Adam critic_opt(1);

  auto denormalize = [&](const std::vector<double>& a) {
    ScenarioVector v;
    v.values.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
      const ParameterSpec& p = space.spec(d);
      v.values[d] = p.lower + clamp(a[d], 0.0, 1.0) * (p.upper - p.lower);
    }
    return v;
  };

  for (int iter = 1; iter <= budget.iterations; ++iter) {
    std::vector<std::vector<double>> actions(pop, std::vector<double>(n));
    std::vector<ScenarioVector> xs(pop);
    for (int i = 0; i < pop; ++i) {
      Rng rng = root.fork(iter, i);
      for (std::size_t d = 0; d < n; ++d) {
        actions[i][d] = mu[d] + std::exp(log_std[d]) * rng.normal();
      }
      xs[i] = denormalize(actions[i]);
    }
    auto outs = evaluate_batch(objective, xs, parallel);
    std::vector<double> rewards(pop);
    for (int i = 0; i < pop; ++i) rewards[i] = outs[i].objectives.at(0);
    record_batch(report, xs, std::move(outs), iter);
    update_best_history(report);

    if (!baseline_primed) {
      // Cold value baseline would distort the first advantages.
      double mean_r = 0.0;
      for (double r : rewards) mean_r += r;
      baseline = mean_r / pop;
      baseline_primed = true;
    }

    std::vector<double> advantage(pop);
    double adv_mean = 0.0;
    for (int i = 0; i < pop; ++i) {
      advantage[i] = rewards[i] - baseline;
      adv_mean += advantage[i];
    }
    adv_mean /= pop;
    double adv_var = 0.0;
    for (double a : advantage) adv_var += (a - adv_mean) * (a - adv_mean);
    const double adv_std = std::sqrt(adv_var / pop) + 1e-8;
    for (double& a : advantage) a = (a - adv_mean) / adv_std;

    auto log_prob = [&](const std::vector<double>& action, const std::vector<double>& mean,
                        const std::vector<double>& ls) {
      double lp = 0.0;
      for (std::size_t d = 0; d < n; ++d) {
        const double sigma = std::exp(ls[d]);
        const double z = (action[d] - mean[d]) / sigma;
        lp += -0.5 * z * z - ls[d] - 0.5 * std::log(2.0 * std::numbers::pi);
      }
      return lp;
    };

    std::vector<double> old_logp(pop);
    const std::vector<double> mu_old = mu;
    const std::vector<double> log_std_old = log_std;
    for (int i = 0; i < pop; ++i) old_logp[i] = log_prob(actions[i], mu_old, log_std_old);

    for (int epoch = 0; epoch < cfg.k_epochs; ++epoch) {
      std::vector<double> grad(2 * n, 0.0);  // d surrogate / d (mu, log_std)
      for (int i = 0; i < pop; ++i) {
        const double logp = log_prob(actions[i], mu, log_std);
        const double ratio = std::exp(logp - old_logp[i]);
        const double adv = advantage[i];
        const bool active = adv >= 0.0 ? ratio < 1.0 + cfg.clip_epsilon
                                       : ratio > 1.0 - cfg.clip_epsilon;
        if (!active) continue;
        const double scale = adv * ratio / pop;
        for (std::size_t d = 0; d < n; ++d) {
          const double sigma = std::exp(log_std[d]);
          const double z = (actions[i][d] - mu[d]) / sigma;
          grad[d] += scale * z / sigma;            // d logp / d mu
          grad[n + d] += scale * (z * z - 1.0);    // d logp / d log_std
        }
      }
      std::vector<double> params(2 * n);
      std::copy(mu.begin(), mu.end(), params.begin());
      std::copy(log_std.begin(), log_std.end(), params.begin() + n);
      actor_opt.step(params, grad, cfg.lr_actor);
      std::copy(params.begin(), params.begin() + n, mu.begin());
      std::copy(params.begin() + n, params.end(), log_std.begin());
      for (double& ls : log_std) ls = clamp(ls, -5.0, 1.0);

      // Value regression toward the batch rewards.
      double value_grad = 0.0;
      for (int i = 0; i < pop; ++i) value_grad += 2.0 * (rewards[i] - baseline);
      value_grad /= pop;
      std::vector<double> b{baseline};
      critic_opt.step(b, std::vector<double>{value_grad}, cfg.lr_critic);
      baseline = b[0];
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    report.diagnostics["policy_mean_" + std::to_string(d)] = mu[d];
    report.diagnostics["policy_log_std_" + std::to_string(d)] = log_std[d];
  }
  report.diagnostics["value_baseline"] = baseline;
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

CampaignReport nsga2(const SearchSpace& space, const ObjectiveContract& objective,
                     Budget budget, const Nsga2Config& cfg, std::uint64_t seed,
                     bool parallel) {
  budget.validate();
  require_arity(objective, 2, "nsga2");
  const auto t0 = Clock::now();
  const Rng root(seed);
  const std::size_t n = space.dimension();
  const int pop = budget.population;

  CampaignReport report;
  report.algorithm = "nsga2";
  report.seed = seed;
  report.budget = budget;
  for (const ParameterSpec& p : space.specs()) report.parameter_names.push_back(p.name);

  struct Member {
    ScenarioVector x;
    std::vector<double> objectives;
    std::size_t eval_index;
    int rank = 0;
    double crowding = 0.0;
  };

  auto rank_population = [](std::vector<Member>& pool) {
    std::vector<ParetoPoint> points;
    points.reserve(pool.size());
    for (const Member& m : pool) points.push_back({m.objectives, m.eval_index});
    const auto fronts = non_dominated_sort(points);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
      std::vector<ParetoPoint> front;
      for (std::size_t idx : fronts[r]) front.push_back(points[idx]);
      const auto crowd = crowding_distance(front);
      for (std::size_t k = 0; k < fronts[r].size(); ++k) {
        pool[fronts[r][k]].rank = static_cast<int>(r);
        pool[fronts[r][k]].crowding = crowd[k];
      }
    }
    return fronts;
  };

  std::vector<Member> population;
  {
    std::vector<ScenarioVector> xs;
    for (int i = 0; i < pop; ++i) xs.push_back(uniform_sample(space, root.fork(1, i)));
    auto outs = evaluate_batch(objective, xs, parallel);
    for (int i = 0; i < pop; ++i) {
      population.push_back({xs[i], outs[i].objectives, report.evaluations.size() + i});
    }
    record_batch(report, xs, std::move(outs), 1);
  }
  auto fronts = rank_population(population);
  {
    std::vector<std::size_t> first;
    for (std::size_t idx : fronts[0]) first.push_back(population[idx].eval_index);
    report.generation_fronts.push_back(std::move(first));
  }

  for (int iter = 2; iter <= budget.iterations; ++iter) {
    std::vector<ScenarioVector> offspring(pop);
    for (int i = 0; i < pop; ++i) {
      Rng rng = root.fork(iter, i);
      auto tournament = [&]() -> const Member& {
        const Member& a = population[rng.uniform_index(pop)];
        const Member& b = population[rng.uniform_index(pop)];
        if (a.rank != b.rank) return a.rank < b.rank ? a : b;
        return a.crowding >= b.crowding ? a : b;
      };
      const Member& pa = tournament();
      const Member& pb = tournament();
      ScenarioVector child = pa.x;
      if (rng.uniform01() < cfg.crossover_prob) {
        for (std::size_t d = 0; d < n; ++d) {
          const ParameterSpec& p = space.spec(d);
          child.values[d] =
              sbx_child(pa.x.values[d], pb.x.values[d], cfg.eta_crossover, p.lower, p.upper, rng);
        }
      }
      for (std::size_t d = 0; d < n; ++d) {
        if (rng.uniform01() < cfg.mutation_prob) {
          const ParameterSpec& p = space.spec(d);
          child.values[d] =
              polynomial_mutation(child.values[d], cfg.eta_mutation, p.lower, p.upper, rng);
        }
      }
      offspring[i] = std::move(child);
    }

    auto outs = evaluate_batch(objective, offspring, parallel);
    std::vector<Member> combined = population;
    for (int i = 0; i < pop; ++i) {
      combined.push_back({offspring[i], outs[i].objectives, report.evaluations.size() + i});
    }
    record_batch(report, offspring, std::move(outs), iter);

    const auto combined_fronts = rank_population(combined);
    std::vector<Member> next;
    next.reserve(pop);
    for (const auto& front : combined_fronts) {
      if (next.size() + front.size() <= static_cast<std::size_t>(pop)) {
        for (std::size_t idx : front) next.push_back(combined[idx]);
      } else {
        std::vector<std::size_t> order(front.begin(), front.end());
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          return combined[a].crowding > combined[b].crowding;
        });
        for (std::size_t idx : order) {
          if (next.size() == static_cast<std::size_t>(pop)) break;
          next.push_back(combined[idx]);
        }
      }
      if (next.size() == static_cast<std::size_t>(pop)) break;
    }
    population = std::move(next);

    fronts = rank_population(population);
    std::vector<std::size_t> first;
    for (std::size_t idx : fronts[0]) first.push_back(population[idx].eval_index);
    report.generation_fronts.push_back(std::move(first));
  }

  for (const Member& m : population) report.final_population.push_back(m.eval_index);
  finalize_multi(report);
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

CampaignReport run_optimizer(const std::string& algorithm, const SearchSpace& space,
                             const ObjectiveContract& objective, Budget budget,
                             const OptimizerConfigs& cfgs, std::uint64_t seed,
                             bool parallel) {
  if (algorithm == "rs") return random_search(space, objective, budget, seed, parallel);
  if (algorithm == "pso") return pso(space, objective, budget, cfgs.pso, seed, parallel);
  if (algorithm == "ga") return ga(space, objective, budget, cfgs.ga, seed, parallel);
  if (algorithm == "ppo") return ppo_search(space, objective, budget, cfgs.ppo, seed, parallel);
  if (algorithm == "nsga2") return nsga2(space, objective, budget, cfgs.nsga2, seed, parallel);
  throw Error("unknown optimizer: '" + algorithm + "'");
}

}  // namespace scengen
