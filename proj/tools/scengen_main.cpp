// scengen: scenario generation and criticality search on a kinematic
// crossroad. Subcommands: validate | export | simulate | campaign | weights |
// pareto. One JSON config file drives everything; --scenario/--seed/--out
// flags win over the file. Exit codes: 0 success, 1 domain failure
// (violations, non-dominating input), 2 usage or config errors.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scengen/campaign.hpp"
#include "scengen/catalog.hpp"
#include "scengen/numeric.hpp"
#include "scengen/ontology.hpp"
#include "scengen/openx.hpp"
#include "scengen/pareto.hpp"
#include "scengen/pipeline.hpp"
#include "scengen/run_config.hpp"
#include "scengen/triples.hpp"

namespace fs = std::filesystem;
using namespace scengen;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

struct Flags {
  std::string config_path;
  std::optional<std::string> scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

RunConfig load_config(const Flags& flags) {
  RunConfig cfg;
  if (!flags.config_path.empty()) cfg = RunConfig::from_file(flags.config_path);
  if (flags.scenario) cfg.scenario = *flags.scenario;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.out) cfg.out_dir = *flags.out;
  if (const char* env = std::getenv("SCENGEN_OUT")) {
    if (!flags.out) cfg.out_dir = env;
  }
  return cfg;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_validate(const RunConfig& cfg) {
  const auto violations = validate(cfg.validation_state, cfg.constraints);
  if (violations.empty()) {
    std::cout << "scenario state satisfies all " << builtin_rules().size()
              << " constraint rules\n";
    return kOk;
  }
  for (const auto& v : violations) {
    std::cout << "violation " << v.rule_id << ": " << v.message << "\n";
  }
  std::cout << violations.size() << " violation(s)\n";
  return kDomainFailure;
}

int cmd_export(const RunConfig& cfg) {
  const auto logical = catalog_scenario(cfg.scenario);
  const auto map = build_crossroad(cfg.map, cfg.waypoint_setback);
  auto tmpl = build_template();
  if (!cfg.ontology_extensions.empty()) extend_template(tmpl, cfg.ontology_extensions);
  const auto vector = default_vector(cfg.space, logical, cfg.named_values);
  const auto graph =
      instantiate(tmpl, logical, cfg.space, vector, map, cfg.constraints, cfg.trigger);

  const fs::path out_dir(cfg.out_dir);
  const fs::path xodr_path = out_dir / cfg.emitter.xodr_filename;
  const fs::path xosc_path = out_dir / (cfg.scenario + ".xosc");
  const fs::path triples_path = out_dir / (cfg.scenario + ".nt-like");

  write_file(xodr_path, emit_xodr(cfg.map, cfg.emitter));
  write_file(xosc_path, emit_xosc(graph, cfg.emitter));
  write_file(triples_path, export_triples(graph));

  std::cout << "wrote " << xodr_path.string() << "\n";
  std::cout << "wrote " << xosc_path.string() << "\n";
  std::cout << "wrote " << triples_path.string() << "\n";
  return kOk;
}

int cmd_simulate(const RunConfig& cfg) {
  const auto logical = catalog_scenario(cfg.scenario);
  auto map = build_crossroad(cfg.map, cfg.waypoint_setback);
  map.signal = cfg.signal;
  const auto vector = default_vector(cfg.space, logical, cfg.named_values);
  const auto trace = simulate(map, logical, cfg.space, vector, cfg.sim);
  const auto mv = compute_metrics(trace);
  const double fit = fitness(mv, cfg.metrics.weights, cfg.metrics.fitness_form);
  const bool critical =
      classify_critical(mv, cfg.metrics.thresholds, cfg.metrics.critical_rule);

  nlohmann::json doc;
  auto put = [&doc](const char* key, double v) {
    doc[key] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json();
  };
  doc["scenario"] = cfg.scenario;
  put("d_min", mv.d_min);
  put("v_d", mv.v_d * cfg.report_speed_factor);
  put("ttc_min", mv.ttc_min);
  doc["n_collision"] = mv.n_collision;
  doc["n_brake"] = mv.n_brake;
  doc["r_red"] = mv.r_red;
  put("l_offset", mv.l_offset);
  put("a_change", mv.a_change);
  put("fitness", fit);
  doc["critical"] = critical;
  const std::string metrics_json = doc.dump(2);
  std::cout << metrics_json << "\n";

  const fs::path out_dir(cfg.out_dir);
  write_file(out_dir / (cfg.scenario + "_metrics.json"), metrics_json + "\n");
  write_file(out_dir / (cfg.scenario + "_trace.csv"), trace.to_csv());
  write_file(out_dir / (cfg.scenario + "_trace.json"), trace.to_json_text());
  std::cout << "wrote " << (out_dir / (cfg.scenario + "_trace.csv")).string() << "\n";
  return kOk;
}

struct AlgorithmRun {
  std::string name;
  CampaignReport report;
  CampaignStats stats;
};

AlgorithmRun run_campaign_algorithm(const RunConfig& cfg, const std::string& name) {
  const auto logical = catalog_scenario(cfg.scenario);
  auto map = build_crossroad(cfg.map, cfg.waypoint_setback);
  map.signal = cfg.signal;

  const bool multi = name == "nsga2" || name == "rs_multi";
  AlgorithmRun run;
  run.name = name;
  if (multi) {
    const auto objective = make_multi_objective(map, logical, cfg.space, cfg.sim, cfg.metrics);
    run.report = name == "nsga2"
                     ? nsga2(cfg.space, objective, cfg.budget, cfg.optimizers.nsga2, cfg.seed,
                             cfg.parallel)
                     : random_search(cfg.space, objective, cfg.budget, cfg.seed, cfg.parallel);
    run.report.algorithm = name;
  } else {
    const auto objective = make_single_objective(map, logical, cfg.space, cfg.sim, cfg.metrics);
    run.report = run_optimizer(name, cfg.space, objective, cfg.budget, cfg.optimizers,
                               cfg.seed, cfg.parallel);
  }
  run.stats = campaign_stats(run.report, cfg.metrics.thresholds, cfg.metrics.critical_rule);
  return run;
}

std::vector<double> metric_column(const CampaignReport& report, const char* key) {
  std::vector<double> out;
  for (const auto& e : report.evaluations) {
    auto it = e.out.metrics.find(key);
    if (it != e.out.metrics.end() && std::isfinite(it->second)) out.push_back(it->second);
  }
  return out;
}

std::string fmt_cell(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void print_comparison(const std::vector<AlgorithmRun>& runs, const RunConfig& cfg) {
  std::vector<CampaignStats> stats;
  std::vector<double> walls;
  for (const auto& r : runs) {
    stats.push_back(r.stats);
    walls.push_back(r.report.wall_seconds);
  }
  const auto t_critic = relative_time_per_critical(stats, walls);

  auto row = [&](const std::string& label, auto getter) {
    std::cout << label;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      std::cout << "\t" << getter(i);
    }
    std::cout << "\n";
  };
  row("metric", [&](std::size_t i) { return runs[i].name; });
  row("R_critic", [&](std::size_t i) { return fmt_cell(stats[i].r_critic); });
  row("T_critic", [&](std::size_t i) { return fmt_cell(t_critic[i]); });
  row("avg_d_min",
      [&](std::size_t i) { return fmt_cell(mean_of(metric_column(runs[i].report, "d_min"))); });
  row("med_d_min", [&](std::size_t i) {
    return fmt_cell(median_of(metric_column(runs[i].report, "d_min")));
  });
  row("avg_v_d", [&](std::size_t i) {
    return fmt_cell(cfg.report_speed_factor * mean_of(metric_column(runs[i].report, "v_d")));
  });
  row("med_v_d", [&](std::size_t i) {
    return fmt_cell(cfg.report_speed_factor * median_of(metric_column(runs[i].report, "v_d")));
  });
  row("avg_fitness", [&](std::size_t i) {
    return fmt_cell(mean_of(metric_column(runs[i].report, "fitness")));
  });
  row("med_fitness", [&](std::size_t i) {
    return fmt_cell(median_of(metric_column(runs[i].report, "fitness")));
  });
  row("runtime_s",
      [&](std::size_t i) { return fmt_cell(runs[i].report.wall_seconds); });
  row("final_hv", [&](std::size_t i) {
    return runs[i].report.hv_history.empty() ? std::string("/")
                                             : fmt_cell(runs[i].report.hv_history.back());
  });
  row("final_spread", [&](std::size_t i) {
    return runs[i].report.spread_history.empty()
               ? std::string("/")
               : fmt_cell(runs[i].report.spread_history.back());
  });
}

int cmd_campaign(const RunConfig& cfg) {
  std::vector<std::string> algorithms = cfg.campaign_algorithms;
  if (algorithms.empty()) algorithms.push_back(cfg.algorithm);

  const fs::path out_dir(cfg.out_dir);
  std::vector<AlgorithmRun> runs;
  for (const std::string& name : algorithms) {
    runs.push_back(run_campaign_algorithm(cfg, name));
    const AlgorithmRun& run = runs.back();
    write_file(out_dir / ("report_" + name + ".json"), report_to_json(run.report));
    write_file(out_dir / ("evaluations_" + name + ".csv"),
               evaluations_to_csv(run.report));
    write_file(out_dir / ("timing_" + name + ".json"), timing_to_json(run.report));

    std::cout << name << ": R_critic=" << fmt_cell(run.stats.r_critic)
              << " critical=" << run.stats.critical << "/" << run.stats.total;
    if (!run.report.best_history.empty()) {
      std::cout << " best_fitness=" << fmt_cell(run.report.best_history.back());
      const auto& best = run.report.evaluations[run.report.best_index_history.back()];
      std::cout << " best_x=[";
      for (std::size_t d = 0; d < best.x.values.size(); ++d) {
        std::cout << (d ? "," : "") << format_sig(best.x.values[d], 6);
      }
      std::cout << "]";
    }
    if (!run.report.hv_history.empty()) {
      std::cout << " final_hv=" << fmt_cell(run.report.hv_history.back());
    }
    std::cout << "\n";
  }
  if (runs.size() > 1) {
    std::cout << "\n";
    print_comparison(runs, cfg);
  }
  return kOk;
}

int cmd_weights(const std::string& samples_path, const std::string& subjective_path,
                const std::string& out_path) {
  const auto samples = parse_metric_samples_csv(read_file(samples_path));
  auto weights = entropy_weights(samples.rows, samples.directions, samples.names);
  if (!subjective_path.empty()) {
    const auto subjective = weights_from_json_text(read_file(subjective_path));
    weights = combine_weights(subjective, weights);
  }
  const std::string json = weights_to_json(weights);
  std::cout << json << "\n";
  if (!out_path.empty()) write_file(out_path, json + "\n");
  return kOk;
}

int cmd_pareto(const std::string& front_path, const std::string& ref_text) {
  std::vector<ParetoPoint> front;
  std::istringstream in(read_file(front_path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    bool numeric = true;
    while (std::getline(row, cell, ',')) {
      try {
        values.push_back(parse_double(cell));
      } catch (const Error&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) continue;  // header row
    if (values.size() != 2) throw Error("front rows need exactly two objectives");
    front.push_back({values, front.size()});
  }
  if (front.empty()) throw Error("front CSV has no data rows");

  std::vector<double> reference;
  std::istringstream ref_in(ref_text);
  std::string cell;
  while (std::getline(ref_in, cell, ',')) reference.push_back(parse_double(cell));
  if (reference.size() != 2) throw Error("reference must be two comma-separated numbers");

  std::cout << "hypervolume=" << format_exact(hypervolume(front, reference)) << "\n";
  std::cout << "spread=" << format_exact(spread(front)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossroad scenario generation and criticality search"};
  app.require_subcommand(1);

  Flags flags;
  std::string samples_path, subjective_path, weights_out, front_path, ref_text = "1,1";

  auto add_common = [&flags](CLI::App* cmd, bool with_scenario = true) {
    cmd->add_option("--config,-c", flags.config_path, "JSON run config");
    if (with_scenario) {
      cmd->add_option_function<std::string>(
          "--scenario,-s", [&flags](const std::string& v) { flags.scenario = v; },
          "logical scenario id (S1..S4)");
    }
    cmd->add_option_function<std::uint64_t>(
        "--seed", [&flags](std::uint64_t v) { flags.seed = v; }, "campaign seed");
    cmd->add_option_function<std::string>(
        "--out,-o", [&flags](const std::string& v) { flags.out = v; }, "output directory");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a scenario state against the constraint rules");
  add_common(validate_cmd, false);

  CLI::App* export_cmd =
      app.add_subcommand("export", "emit .xodr, .xosc, and .nt-like files for a scenario");
  add_common(export_cmd);

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "run one scenario and print its criticality metrics");
  add_common(simulate_cmd);

  CLI::App* campaign_cmd =
      app.add_subcommand("campaign", "run optimization campaign(s) and report statistics");
  add_common(campaign_cmd);

  CLI::App* weights_cmd =
      app.add_subcommand("weights", "entropy weighting from a metric samples CSV");
  weights_cmd->add_option("--samples", samples_path, "metric samples CSV")->required();
  weights_cmd->add_option("--subjective", subjective_path,
                          "subjective weights JSON to combine (40/60)");
  weights_cmd->add_option("--out,-o", weights_out, "write weights JSON here");

  CLI::App* pareto_cmd =
      app.add_subcommand("pareto", "hypervolume and spread of a front CSV");
  pareto_cmd->add_option("--front", front_path, "front CSV with two objective columns")
      ->required();
  pareto_cmd->add_option("--ref", ref_text, "reference point, e.g. 1,1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(load_config(flags));
    if (export_cmd->parsed()) return cmd_export(load_config(flags));
    if (simulate_cmd->parsed()) return cmd_simulate(load_config(flags));
    if (campaign_cmd->parsed()) return cmd_campaign(load_config(flags));
    if (weights_cmd->parsed()) return cmd_weights(samples_path, subjective_path, weights_out);
    if (pareto_cmd->parsed()) return cmd_pareto(front_path, ref_text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Unreadable files and malformed configs are usage errors; everything
    // else is a domain failure.
    const std::string what = e.what();
    if (what.rfind("cannot read", 0) == 0 || what.find("JSON") != std::string::npos ||
        what.find("CSV") != std::string::npos) {
      return kUsageError;
    }
    return kDomainFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsageError;
}
