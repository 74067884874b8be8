#include <doctest.h>

#include <cmath>

#include "scengen/campaign.hpp"
#include "scengen/catalog.hpp"
#include "scengen/numeric.hpp"
#include "scengen/pipeline.hpp"

using namespace scengen;

namespace {

CampaignReport synthetic_report(std::size_t total, std::size_t critical) {
  CampaignReport report;
  report.algorithm = "rs";
  report.budget = {1, static_cast<int>(total)};
  for (std::size_t i = 0; i < total; ++i) {
    Evaluation e;
    e.iteration = 1;
    e.x.values = {static_cast<double>(i)};
    const bool is_critical = i < critical;
    e.out.objectives = {0.0};
    e.out.metrics = {{"n_collision", is_critical ? 1.0 : 0.0},
                     {"d_min", is_critical ? 0.0 : 10.0},
                     {"v_d", 5.0}};
    report.evaluations.push_back(std::move(e));
  }
  return report;
}

}  // namespace

TEST_CASE("campaign statistics for the synthetic report") {
  const auto report = synthetic_report(1000, 530);
  const auto stats = campaign_stats(report);
  CHECK(stats.total == 1000);
  CHECK(stats.critical == 530);
  CHECK(stats.r_critic == 0.530);
  CHECK(stats.evals_per_critical == doctest::Approx(1000.0 / 530.0));
}

TEST_CASE("zero critical scenarios give an infinite per-critical cost") {
  const auto stats = campaign_stats(synthetic_report(100, 0));
  CHECK(stats.r_critic == 0.0);
  CHECK(std::isinf(stats.evals_per_critical));
}

TEST_CASE("relative time per critical normalizes the fastest to one") {
  std::vector<CampaignStats> stats(2);
  stats[0].critical = 100;
  stats[1].critical = 100;
  const auto relative = relative_time_per_critical(stats, {508.9, 100.0});
  CHECK(relative[0] == doctest::Approx(5.089));
  CHECK(relative[1] == doctest::Approx(1.000));

  std::vector<CampaignStats> with_empty(2);
  with_empty[0].critical = 10;
  with_empty[1].critical = 0;
  const auto rel2 = relative_time_per_critical(with_empty, {10.0, 10.0});
  CHECK(rel2[0] == doctest::Approx(1.0));
  CHECK(std::isinf(rel2[1]));

  CHECK_THROWS_AS(relative_time_per_critical(stats, {1.0}), Error);
}

TEST_CASE("report json excludes wall time and is deterministic") {
  auto report = synthetic_report(10, 5);
  report.wall_seconds = 123.456;
  const std::string a = report_to_json(report);
  report.wall_seconds = 999.0;
  const std::string b = report_to_json(report);
  CHECK(a == b);
  CHECK(a.find("wall") == std::string::npos);
  CHECK(timing_to_json(report).find("wall_seconds") != std::string::npos);
}

TEST_CASE("evaluations csv carries parameters, objectives, and metrics") {
  auto report = synthetic_report(3, 1);
  report.parameter_names = {"bv_speed"};
  const std::string csv = evaluations_to_csv(report);
  CHECK(csv.rfind("iteration,x_bv_speed,f0,d_min,n_collision,v_d\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("mean and median helpers") {
  CHECK(mean_of({1.0, 2.0, 3.0}) == doctest::Approx(2.0));
  CHECK(median_of({3.0, 1.0, 2.0}) == doctest::Approx(2.0));
  CHECK(median_of({4.0, 1.0, 2.0, 3.0}) == doctest::Approx(2.5));
  CHECK(std::isnan(mean_of({})));
}

TEST_CASE("simulation-backed objectives record the classification metrics") {
  const auto map = build_crossroad(StaticMapSpec{});
  const auto space = SearchSpace::default_dynamic();
  const auto logical = catalog_scenario("S1");
  const MetricConfig metric_cfg;
  const SimConfig sim_cfg;

  const auto single = make_single_objective(map, logical, space, sim_cfg, metric_cfg);
  const auto out = single.evaluate(encode(space, {{"bv_speed", 1.8},
                                                  {"bv_spawn_delay", 0.0},
                                                  {"ego_speed", 6.9},
                                                  {"ego_spawn_offset", 0.0}}));
  REQUIRE(out.objectives.size() == 1);
  CHECK(out.metrics.count("d_min") == 1);
  CHECK(out.metrics.count("v_d") == 1);
  CHECK(out.metrics.count("n_collision") == 1);
  CHECK(out.metrics.count("critical") == 1);
  CHECK(out.objectives[0] == doctest::Approx(out.metrics.at("fitness")));

  const auto multi = make_multi_objective(map, logical, space, sim_cfg, metric_cfg);
  const auto mout = multi.evaluate(encode(space, {{"bv_speed", 1.8},
                                                  {"bv_spawn_delay", 0.0},
                                                  {"ego_speed", 6.9},
                                                  {"ego_spawn_offset", 0.0}}));
  REQUIRE(mout.objectives.size() == 2);
  CHECK(mout.objectives[0] == doctest::Approx(mout.metrics.at("d_min")));
  CHECK(mout.objectives[1] == doctest::Approx(-mout.metrics.at("v_d")));

  // Objective values are clamped finite even when the vehicles never meet.
  const auto lonely = single.evaluate(encode(space, {{"bv_speed", 0.5},
                                                     {"bv_spawn_delay", 10.0},
                                                     {"ego_speed", 15.0},
                                                     {"ego_spawn_offset", 0.0}}));
  CHECK(std::isfinite(lonely.objectives[0]));
  CHECK(lonely.metrics.at("d_min") == doctest::Approx(metric_cfg.d_min_cap));
}
