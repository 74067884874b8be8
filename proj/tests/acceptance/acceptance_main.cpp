// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "scengen/campaign.hpp"
#include "scengen/catalog.hpp"
#include "scengen/constraints.hpp"
#include "scengen/metrics.hpp"
#include "scengen/numeric.hpp"
#include "scengen/ontology.hpp"
#include "scengen/openx.hpp"
#include "scengen/pareto.hpp"
#include "scengen/pipeline.hpp"
#include "scengen/rng.hpp"
#include "scengen/simulator.hpp"
#include "scengen/triples.hpp"
#include "scengen/xml.hpp"
#include "unit/oracles.hpp"

using namespace scengen;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// ---- 1: fitness formula ----------------------------------------------------

void criterion_1() {
  const auto weights = default_fitness_weights();
  MetricVector a, b;
  a.d_min = 13.38;
  a.v_d = 17.92;
  b.d_min = 2.00;
  b.v_d = 20.57;
  const double fa = fitness(a, weights);
  const double fb = fitness(b, weights);
  const bool pass = std::fabs(fa - (-8.05)) <= 0.01 && std::fabs(fb - 1.84) <= 0.01;
  report(1, pass,
         "fitness(13.38, 17.92) = " + fmt(fa) + ", fitness(2.00, 20.57) = " + fmt(fb));
}

// ---- 2: constraint equations ------------------------------------------------

void criterion_2() {
  const double f40 = friction_from_wetness(40.0);
  const auto fog = fog_derivatives(60.0);
  const double az_m20 = azimuth_from_altitude(-20.0);
  const double az_15 = azimuth_from_altitude(15.0);
  const bool pass = f40 == 0.6 && fog.fog_distance == 40.0 && fog.fog_falloff == 3.0 &&
                    az_m20 == 0.0 &&
                    std::fabs(az_15 - 31.25 * std::numbers::pi / 6.0) <= 1e-9;
  report(2, pass,
         "friction(40)=" + fmt(f40) + " fog(60)=(" + fmt(fog.fog_distance) + "," +
             fmt(fog.fog_falloff) + ") azimuth(-20)=" + fmt(az_m20) +
             " azimuth(15)=" + fmt(az_15));
}

// ---- 3: entropy weighting ---------------------------------------------------

void criterion_3() {
  Rng rng(2024);
  bool pass = true;
  double worst = 0.0;
  for (int trial = 0; trial < 200 && pass; ++trial) {
    std::vector<std::vector<double>> samples(5, std::vector<double>(3));
    std::vector<Direction> dirs(3);
    std::vector<bool> is_cost(3);
    for (int j = 0; j < 3; ++j) {
      const bool cost = rng.uniform01() < 0.5;
      dirs[j] = cost ? Direction::kCost : Direction::kBenefit;
      is_cost[j] = cost;
    }
    for (auto& row : samples) {
      for (double& v : row) v = rng.uniform(-100, 100);
    }
    if (trial % 7 == 0) {
      // Constant column: must receive exactly zero weight.
      for (auto& row : samples) row[1] = 42.0;
    }
    const auto got = entropy_weights(samples, dirs);
    const auto want = oracles::entropy_weights(samples, is_cost);
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, std::fabs(got.weights[j] - want[j]));
      if (std::fabs(got.weights[j] - want[j]) > 1e-9) pass = false;
      sum += got.weights[j];
    }
    if (std::fabs(sum - 1.0) > 1e-12) pass = false;
    if (trial % 7 == 0 && got.weights[1] != 0.0) pass = false;
  }
  report(3, pass, "200 random 5x3 matrices, max |w - oracle| = " + fmt(worst));
}

// ---- 4 & 5: campaign orderings ----------------------------------------------

struct CampaignSetup {
  CrossroadMap map = build_crossroad(StaticMapSpec{});
  SearchSpace space = SearchSpace::default_dynamic();
  LogicalScenario logical = catalog_scenario("S4");
  MetricConfig metric_cfg;
  SimConfig sim_cfg;
  Budget budget{25, 40};
};

void criterion_4() {
  const CampaignSetup s;
  const auto objective =
      make_single_objective(s.map, s.logical, s.space, s.sim_cfg, s.metric_cfg);

  auto mean_stats = [&](const std::string& alg) {
    double r = 0.0, best = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto rep =
          run_optimizer(alg, s.space, objective, s.budget, OptimizerConfigs{}, seed, true);
      r += campaign_stats(rep, s.metric_cfg.thresholds, s.metric_cfg.critical_rule).r_critic;
      best += rep.best_history.back();
    }
    return std::pair{r / 5.0, best / 5.0};
  };

  const auto [rs_r, rs_best] = mean_stats("rs");
  const auto [pso_r, pso_best] = mean_stats("pso");
  const auto [ppo_r, ppo_best] = mean_stats("ppo");

  const bool pass =
      pso_r > rs_r && ppo_r > rs_r && pso_best > rs_best && ppo_best > rs_best;
  report(4, pass,
         "mean R_critic rs=" + fmt(rs_r) + " pso=" + fmt(pso_r) + " ppo=" + fmt(ppo_r) +
             "; mean best fitness rs=" + fmt(rs_best) + " pso=" + fmt(pso_best) +
             " ppo=" + fmt(ppo_best));
}

void criterion_5() {
  const CampaignSetup s;
  const auto objective =
      make_multi_objective(s.map, s.logical, s.space, s.sim_cfg, s.metric_cfg);

  int hv_wins = 0;
  double nsga_r = 0.0, rs_r = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto nsga_rep = nsga2(s.space, objective, s.budget, Nsga2Config{}, seed, true);
    const auto rs_rep = random_search(s.space, objective, s.budget, seed, true);
    nsga_r += campaign_stats(nsga_rep, s.metric_cfg.thresholds).r_critic / 5.0;
    rs_r += campaign_stats(rs_rep, s.metric_cfg.thresholds).r_critic / 5.0;

    // Shared normalization over the union of both campaigns' evaluations,
    // reference (1.1, 1.1) in normalized objective space.
    std::vector<double> lo(2, kInf), hi(2, -kInf);
    for (const auto* rep : {&nsga_rep, &rs_rep}) {
      for (const auto& e : rep->evaluations) {
        for (int m = 0; m < 2; ++m) {
          lo[m] = std::min(lo[m], e.out.objectives[m]);
          hi[m] = std::max(hi[m], e.out.objectives[m]);
        }
      }
    }
    auto normalized_front = [&](const CampaignReport& rep,
                                const std::vector<std::size_t>& indices) {
      std::vector<ParetoPoint> front;
      for (std::size_t idx : indices) {
        std::vector<double> obj(2);
        for (int m = 0; m < 2; ++m) {
          const double v = rep.evaluations[idx].out.objectives[m];
          obj[m] = hi[m] > lo[m] ? (v - lo[m]) / (hi[m] - lo[m]) : 0.0;
        }
        front.push_back({obj, idx});
      }
      return front;
    };

    std::vector<ParetoPoint> rs_all;
    for (std::size_t i = 0; i < rs_rep.evaluations.size(); ++i) {
      rs_all.push_back({rs_rep.evaluations[i].out.objectives, i});
    }
    std::vector<std::size_t> rs_front_idx = non_dominated_filter(rs_all);

    const double nsga_hv =
        hypervolume(normalized_front(nsga_rep, nsga_rep.generation_fronts.back()), {1.1, 1.1});
    const double rs_hv = hypervolume(normalized_front(rs_rep, rs_front_idx), {1.1, 1.1});
    if (nsga_hv >= rs_hv) ++hv_wins;
  }

  const bool pass = hv_wins >= 4 && nsga_r > rs_r;
  report(5, pass,
         "hv wins " + std::to_string(hv_wins) + "/5; mean R_critic nsga2=" + fmt(nsga_r) +
             " rs=" + fmt(rs_r));
}

// ---- 6: pareto oracle equivalence -------------------------------------------

void criterion_6() {
  Rng rng(808);
  bool pass = true;
  std::string detail;

  for (int trial = 0; trial < 500 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(20));
    const int k = 2 + static_cast<int>(rng.uniform_index(3));
    std::vector<std::vector<double>> objs(n, std::vector<double>(k));
    std::vector<ParetoPoint> points;
    for (int i = 0; i < n; ++i) {
      for (double& v : objs[i]) v = std::floor(rng.uniform(0, 8));
      points.push_back({objs[i], static_cast<std::size_t>(i)});
    }
    const auto got = non_dominated_sort(points);
    const auto want = oracles::non_dominated_sort(objs);
    if (got.size() != want.size()) pass = false;
    for (std::size_t f = 0; pass && f < got.size(); ++f) {
      if (got[f] != want[f]) pass = false;
    }
  }
  if (!pass) detail = "non-dominated sort disagrees with brute force";

  for (int trial = 0; trial < 500 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(8));
    std::vector<std::vector<double>> objs(n, std::vector<double>(2));
    std::vector<ParetoPoint> points;
    for (int i = 0; i < n; ++i) {
      objs[i][0] = rng.uniform(0, 1);
      objs[i][1] = rng.uniform(0, 1);
      points.push_back({objs[i], static_cast<std::size_t>(i)});
    }
    const auto got = crowding_distance(points);
    const auto want = oracles::crowding(objs);
    for (int i = 0; i < n && pass; ++i) {
      if (std::isinf(want[i]) != std::isinf(got[i])) pass = false;
      if (!std::isinf(want[i]) && std::fabs(got[i] - want[i]) > 1e-9) pass = false;
    }
  }
  if (!pass && detail.empty()) detail = "crowding distance disagrees with brute force";

  double worst_sigma = 0.0;
  for (int trial = 0; trial < 50 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(6));
    std::vector<std::vector<double>> objs;
    std::vector<ParetoPoint> points;
    for (int i = 0; i < n; ++i) {
      objs.push_back({rng.uniform(0, 0.95), rng.uniform(0, 0.95)});
      points.push_back({objs.back(), static_cast<std::size_t>(i)});
    }
    const double exact = hypervolume(points, {1.0, 1.0});
    const auto mc = oracles::hypervolume_mc(objs, {1.0, 1.0}, 1000000, 9000 + trial);
    const double sigmas = std::fabs(exact - mc.value) / (mc.sigma > 0 ? mc.sigma : 1e-12);
    worst_sigma = std::max(worst_sigma, sigmas);
    if (std::fabs(exact - mc.value) > 3.0 * mc.sigma + 1e-9) pass = false;
  }
  if (!pass && detail.empty()) detail = "hypervolume outside 3 sigma of Monte Carlo";
  if (pass) {
    detail = "sort x500, crowding x500 exact; hv worst deviation " + fmt(worst_sigma) +
             " sigma over 50 fronts";
  }
  report(6, pass, detail);
}

// ---- 7: simulator physics oracle --------------------------------------------

double path_distance_to(const PathPlan& path, Vec2 target) {
  const auto& poly = path.polyline();
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const Vec2 d = poly[i + 1] - poly[i];
    const double len = d.norm();
    const double t = len > 0 ? clamp((target - poly[i]).dot(d) / (len * len), 0.0, 1.0) : 0.0;
    if (distance(poly[i] + d * t, target) < 1e-6) return s + t * len;
    s += len;
  }
  return -1.0;
}

void criterion_7() {
  const auto map = build_crossroad(StaticMapSpec{});
  const auto space = SearchSpace::default_dynamic();
  const auto logical = catalog_scenario("S1");
  const auto ego_path = plan_path(map, logical.ego_start, logical.ego_end);
  const auto bv_path = plan_path(map, logical.bv_start, logical.bv_end);
  const Vec2 conflict = map.conflicts.at(logical.conflict);
  const double ego_dist = path_distance_to(ego_path, conflict);
  const double bv_dist = path_distance_to(bv_path, conflict);

  Rng rng(515);
  int collisions = 0, zero_gaps = 0, synchronized = 0;
  while (synchronized < 20) {
    const double ego_speed = rng.uniform(4.0, 12.0);
    const double offset = rng.uniform(0.0, 15.0);
    const double t_ego = (ego_dist - offset) / ego_speed;
    const double delay = rng.uniform(0.0, 0.5 * t_ego);
    const double bv_speed = bv_dist / (t_ego - delay);
    if (bv_speed < 0.5 || bv_speed > 15.0) continue;
    ++synchronized;
    const auto trace = simulate(map, logical, space,
                                encode(space, {{"bv_speed", bv_speed},
                                               {"bv_spawn_delay", delay},
                                               {"ego_speed", ego_speed},
                                               {"ego_spawn_offset", offset}}));
    double d_min = kInf;
    for (const auto& sample : trace.samples) {
      if (sample.ego.active && sample.bv.active) d_min = std::min(d_min, sample.gap);
    }
    for (const auto& e : trace.events) {
      if (e.kind == "collision") {
        ++collisions;
        break;
      }
    }
    if (d_min == 0.0) ++zero_gaps;
  }

  int separated = 0, quiet = 0, infinite_ttc = 0;
  while (separated < 20) {
    const double ego_speed = rng.uniform(11.0, 15.0);
    const double bv_speed = rng.uniform(0.5, 15.0);
    if (ego_path.length() / ego_speed >= 10.0) continue;
    ++separated;
    const auto trace = simulate(map, logical, space,
                                encode(space, {{"bv_speed", bv_speed},
                                               {"bv_spawn_delay", 10.0},
                                               {"ego_speed", ego_speed},
                                               {"ego_spawn_offset", 0.0}}));
    const auto mv = compute_metrics(trace);
    if (mv.n_collision == 0) ++quiet;
    if (std::isinf(mv.ttc_min)) ++infinite_ttc;
  }

  const bool pass = collisions == 20 && zero_gaps == 20 && quiet == 20 && infinite_ttc == 20;
  report(7, pass,
         "synchronized: " + std::to_string(collisions) + "/20 collisions, " +
             std::to_string(zero_gaps) + "/20 zero gaps; separating: " +
             std::to_string(infinite_ttc) + "/20 infinite ttc, " + std::to_string(quiet) +
             "/20 collision-free");
}

// ---- 8: xml round trip -------------------------------------------------------

void criterion_8() {
  const auto tmpl = build_template();
  const auto map = build_crossroad(StaticMapSpec{});
  const auto space = SearchSpace::default_dynamic(true);
  EmitterOptions opts;
  opts.fixed_timestamp = "2024-01-01T00:00:00";

  bool pass = true;
  std::string detail;
  for (const auto& logical : scenario_catalog()) {
    const auto vector = default_vector(space, logical,
                                       {{"bv_spawn_delay", 2.5}, {"fog_density", 25.0}});
    const auto graph = instantiate(tmpl, logical, space, vector, map);
    const std::string xml = emit_xosc(graph, opts);

    if (emit_xosc(graph, opts) != xml) {
      pass = false;
      detail = logical.id + ": repeated export differs";
      break;
    }
    try {
      (void)parse_xml(xml);
      (void)parse_xml(emit_xodr(map.geometry, opts));
    } catch (const XmlError& e) {
      pass = false;
      detail = logical.id + ": not well-formed: " + std::string(e.what());
      break;
    }

    const auto extracted = parse_back(xml);
    auto graph_real = [&](const std::string& id, const std::string& prop) {
      const Individual* ind = graph.find_individual(id);
      return std::get<double>(ind->properties.find(prop)->second);
    };
    // Exact recovery of every emitted parameter: the parsed value must equal
    // the 6-significant-digit rendering the emitter wrote.
    auto matches = [&](double parsed, double graph_value) {
      return parsed == parse_double(format_sig(graph_value, 6));
    };

    const ExtractedEntity* ego = nullptr;
    const ExtractedEntity* bv = nullptr;
    for (const auto& e : extracted.entities) {
      if (e.name == "ego") ego = &e;
      if (e.name == "bv") bv = &e;
    }
    if (!ego || !bv || extracted.entities.size() != 2) {
      pass = false;
      detail = logical.id + ": entity extraction failed";
      break;
    }
    bool ok = matches(ego->x, graph_real("ego_teleport", "has_world_x")) &&
              matches(ego->y, graph_real("ego_teleport", "has_world_y")) &&
              matches(ego->heading, graph_real("ego_teleport", "has_world_yaw")) &&
              matches(bv->x, graph_real("bv_teleport", "has_world_x")) &&
              matches(bv->y, graph_real("bv_teleport", "has_world_y")) &&
              ego->init_speed &&
              matches(*ego->init_speed, graph_real("ego_speed", "has_target_speed"));
    bool spawn_found = false;
    for (const auto& ev : extracted.events) {
      if (ev.name == "bv_spawn_event") {
        spawn_found = true;
        ok = ok && ev.target_speed &&
             matches(*ev.target_speed, graph_real("bv_speed", "has_target_speed")) &&
             matches(ev.trigger_value,
                     graph_real("bv_spawn_trigger", "has_trigger_value"));
      }
    }
    ok = ok && spawn_found;
    ok = ok && matches(extracted.weather.fog_density,
                       graph_real("weather_state", "has_fog_density"));
    ok = ok && matches(extracted.weather.fog_distance,
                       graph_real("weather_state", "has_fog_distance"));
    ok = ok && matches(extracted.weather.fog_falloff,
                       graph_real("weather_state", "has_fog_falloff"));
    ok = ok && matches(extracted.weather.friction,
                       graph_real("weather_state", "has_friction"));
    ok = ok && matches(extracted.weather.sun_azimuth, graph_real("sun", "has_azimuth"));
    if (!ok) {
      pass = false;
      detail = logical.id + ": parameter recovery mismatch";
      break;
    }
  }
  if (pass) detail = "4 scenarios round-tripped, byte-stable, well-formed";
  report(8, pass, detail);
}

// ---- 9: constraint repair ----------------------------------------------------

void criterion_9() {
  Rng rng(616);
  bool pass = true;
  for (int trial = 0; trial < 1000 && pass; ++trial) {
    ScenarioState s;
    s.weather.cloud_cover = rng.uniform(-30, 130);
    s.weather.precipitation_intensity = rng.uniform(-30, 130);
    s.weather.precipitation_deposits = rng.uniform(-30, 130);
    s.weather.wind_speed = rng.uniform(-30, 130);
    s.weather.fog_density = rng.uniform(-30, 130);
    s.weather.fog_distance = rng.uniform(-20, 220);
    s.weather.fog_falloff = rng.uniform(-2, 12);
    s.weather.wetness = rng.uniform(-30, 130);
    s.weather.friction = rng.uniform(-0.5, 1.5);
    s.weather.sun_altitude = rng.uniform(-120, 120);
    s.weather.sun_azimuth = rng.uniform(-80, 80);
    if (trial % 2 == 0) {
      s.placements.push_back(
          {"light", PlacementKind::kTrafficLight, {rng.uniform(-80, 80), rng.uniform(-80, 80)}});
      s.placements.push_back(
          {"sign", PlacementKind::kSignage, {rng.uniform(-80, 80), rng.uniform(-80, 80)}});
      s.placements.push_back(
          {"ped", PlacementKind::kPedestrian, {rng.uniform(-80, 80), rng.uniform(-80, 80)}});
      s.placements.push_back(
          {"car", PlacementKind::kVehicle, {rng.uniform(-80, 80), rng.uniform(-80, 80)}});
    }
    s.participants.push_back({"ego", rng.uniform(-5, 40)});
    s.participants.push_back({"bv", rng.uniform(-5, 40)});

    const auto repaired = repair(s);
    if (!validate(repaired).empty()) pass = false;

    const auto twice = repair(repaired);
    const WeatherState &a = repaired.weather, &b = twice.weather;
    if (a.cloud_cover != b.cloud_cover || a.precipitation_intensity != b.precipitation_intensity ||
        a.precipitation_deposits != b.precipitation_deposits || a.wind_speed != b.wind_speed ||
        a.fog_density != b.fog_density || a.fog_distance != b.fog_distance ||
        a.fog_falloff != b.fog_falloff || a.wetness != b.wetness || a.friction != b.friction ||
        a.sun_altitude != b.sun_altitude || a.sun_azimuth != b.sun_azimuth) {
      pass = false;
    }
    for (std::size_t i = 0; i < repaired.placements.size(); ++i) {
      if (repaired.placements[i].position.x != twice.placements[i].position.x ||
          repaired.placements[i].position.y != twice.placements[i].position.y) {
        pass = false;
      }
    }
    for (std::size_t i = 0; i < repaired.participants.size(); ++i) {
      if (repaired.participants[i].speed != twice.participants[i].speed) pass = false;
    }
  }
  report(9, pass, "1000 random states: repair feasible and idempotent");
}

// ---- 10: determinism -----------------------------------------------------------

void criterion_10() {
  const CampaignSetup s;
  Budget budget{10, 20};
  const auto single = make_single_objective(s.map, s.logical, s.space, s.sim_cfg, s.metric_cfg);
  const auto multi = make_multi_objective(s.map, s.logical, s.space, s.sim_cfg, s.metric_cfg);

  bool pass = true;
  std::string failed;
  for (const std::string alg : {"rs", "pso", "ga", "ppo"}) {
    const auto seq = run_optimizer(alg, s.space, single, budget, OptimizerConfigs{}, 42, false);
    const auto par = run_optimizer(alg, s.space, single, budget, OptimizerConfigs{}, 42, true);
    const auto rerun = run_optimizer(alg, s.space, single, budget, OptimizerConfigs{}, 42, true);
    if (report_to_json(seq) != report_to_json(par) ||
        report_to_json(par) != report_to_json(rerun)) {
      pass = false;
      failed = alg;
    }
  }
  const auto seq = nsga2(s.space, multi, budget, Nsga2Config{}, 42, false);
  const auto par = nsga2(s.space, multi, budget, Nsga2Config{}, 42, true);
  if (report_to_json(seq) != report_to_json(par)) {
    pass = false;
    failed = "nsga2";
  }
  report(10, pass,
         pass ? "rs/pso/ga/ppo/nsga2 reruns byte-identical, sequential == parallel"
              : "non-deterministic report: " + failed);
}

// ---- 11: campaign statistics ----------------------------------------------------

void criterion_11() {
  CampaignReport synthetic;
  synthetic.algorithm = "rs";
  synthetic.budget = {25, 40};
  for (int i = 0; i < 1000; ++i) {
    Evaluation e;
    e.iteration = 1 + i / 40;
    const bool critical = i < 530;
    e.out.objectives = {0.0};
    e.out.metrics = {{"n_collision", critical ? 1.0 : 0.0},
                     {"d_min", critical ? 0.0 : 50.0},
                     {"v_d", 3.0}};
    synthetic.evaluations.push_back(std::move(e));
  }
  const auto stats = campaign_stats(synthetic);

  std::vector<CampaignStats> multi(2);
  multi[0].critical = 100;
  multi[1].critical = 100;
  const auto t_critic = relative_time_per_critical(multi, {508.9, 100.0});

  const bool pass = stats.r_critic == 0.530 &&
                    std::fabs(t_critic[0] - 5.089) <= 1e-12 && t_critic[1] == 1.0;
  report(11, pass,
         "R_critic = " + fmt(stats.r_critic) + ", T_critic = (" + fmt(t_critic[0]) + ", " +
             fmt(t_critic[1]) + ")");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/11 criteria passed in %.1f s\n", 11 - failures, seconds);
  return failures == 0 ? 0 : 1;
}
