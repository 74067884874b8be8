#include "scengen/run_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scengen/numeric.hpp"

namespace scengen {

namespace {

using nlohmann::json;

double get_num(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

int get_int(const json& j, const char* key, int fallback) {
  return j.contains(key) ? j.at(key).get<int>() : fallback;
}

std::string get_str(const json& j, const char* key, std::string fallback) {
  return j.contains(key) ? j.at(key).get<std::string>() : fallback;
}

Direction direction_from(const std::string& name) {
  if (name == "cost") return Direction::kCost;
  if (name == "benefit") return Direction::kBenefit;
  throw Error("direction must be cost|benefit, got '" + name + "'");
}

void parse_constraints(const json& j, ConstraintConfig& cfg) {
  cfg.rain_cloud_threshold = get_num(j, "rain_cloud_threshold", cfg.rain_cloud_threshold);
  cfg.wind_high_threshold = get_num(j, "wind_high_threshold", cfg.wind_high_threshold);
  cfg.fog_cap_under_wind = get_num(j, "fog_cap_under_wind", cfg.fog_cap_under_wind);
  cfg.dim_sky_threshold = get_num(j, "dim_sky_threshold", cfg.dim_sky_threshold);
  cfg.dim_sun_altitude_max = get_num(j, "dim_sun_altitude_max", cfg.dim_sun_altitude_max);
  cfg.deposits_lag = get_num(j, "deposits_lag", cfg.deposits_lag);
  cfg.heavy_precipitation = get_num(j, "heavy_precipitation", cfg.heavy_precipitation);
  cfg.heavy_fog = get_num(j, "heavy_fog", cfg.heavy_fog);
  cfg.night_sun_altitude = get_num(j, "night_sun_altitude", cfg.night_sun_altitude);
  cfg.participant_speed_cap = get_num(j, "participant_speed_cap", cfg.participant_speed_cap);
  const std::string friction = get_str(j, "friction_model", "piecewise");
  if (friction == "piecewise") {
    cfg.friction_model = FrictionModel::kPiecewise;
  } else if (friction == "monotone") {
    cfg.friction_model = FrictionModel::kMonotone;
  } else {
    throw Error("friction_model must be piecewise|monotone");
  }
  cfg.normalized_arcsin = j.value("normalized_arcsin", cfg.normalized_arcsin);
}

void parse_weather(const json& j, WeatherState& w) {
  w.cloud_cover = get_num(j, "cloud_cover", w.cloud_cover);
  w.precipitation_intensity = get_num(j, "precipitation_intensity", w.precipitation_intensity);
  w.precipitation_deposits = get_num(j, "precipitation_deposits", w.precipitation_deposits);
  w.wind_speed = get_num(j, "wind_speed", w.wind_speed);
  w.fog_density = get_num(j, "fog_density", w.fog_density);
  w.fog_distance = get_num(j, "fog_distance", w.fog_distance);
  w.fog_falloff = get_num(j, "fog_falloff", w.fog_falloff);
  w.wetness = get_num(j, "wetness", w.wetness);
  w.friction = get_num(j, "friction", w.friction);
  w.sun_altitude = get_num(j, "sun_altitude", w.sun_altitude);
  w.sun_azimuth = get_num(j, "sun_azimuth", w.sun_azimuth);
}

PlacementKind placement_kind_from(const std::string& name) {
  if (name == "traffic_light") return PlacementKind::kTrafficLight;
  if (name == "signage") return PlacementKind::kSignage;
  if (name == "pedestrian") return PlacementKind::kPedestrian;
  if (name == "vehicle") return PlacementKind::kVehicle;
  throw Error("placement kind must be traffic_light|signage|pedestrian|vehicle");
}

MetricWeights parse_weights(const json& arr) {
  MetricWeights w;
  for (const json& item : arr) {
    w.names.push_back(item.at("name").get<std::string>());
    w.weights.push_back(item.at("weight").get<double>());
    w.directions.push_back(direction_from(item.at("direction").get<std::string>()));
  }
  if (w.names.empty()) throw Error("metric weights must be non-empty");
  return w;
}

}  // namespace

RunConfig RunConfig::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("run config JSON: ") + e.what());
  }

  RunConfig cfg;
  cfg.scenario = get_str(doc, "scenario", cfg.scenario);
  if (doc.contains("search_space")) {
    cfg.space = SearchSpace::from_json_text(doc.at("search_space").dump());
  }
  if (doc.contains("named_values")) {
    for (const auto& [key, value] : doc.at("named_values").items()) {
      cfg.named_values[key] = value.get<double>();
    }
  }

  if (doc.contains("map")) {
    const json& m = doc.at("map");
    cfg.map.lane_width = get_num(m, "lane_width", cfg.map.lane_width);
    cfg.map.lanes_per_approach = get_int(m, "lanes_per_approach", cfg.map.lanes_per_approach);
    cfg.map.approach_length = get_num(m, "approach_length", cfg.map.approach_length);
    cfg.map.junction_half_width =
        get_num(m, "junction_half_width", cfg.map.junction_half_width);
    cfg.waypoint_setback = get_num(m, "waypoint_setback", cfg.waypoint_setback);
    if (m.contains("signal")) {
      const json& s = m.at("signal");
      SignalTiming timing;
      timing.green_s = get_num(s, "green_s", timing.green_s);
      timing.yellow_s = get_num(s, "yellow_s", timing.yellow_s);
      timing.red_s = get_num(s, "red_s", timing.red_s);
      cfg.signal = timing;
    }
  }

  if (doc.contains("constraints")) parse_constraints(doc.at("constraints"), cfg.constraints);

  if (doc.contains("sim")) {
    const json& s = doc.at("sim");
    cfg.sim.dt = get_num(s, "dt", cfg.sim.dt);
    cfg.sim.duration = get_num(s, "duration", cfg.sim.duration);
    cfg.sim.vehicle_length = get_num(s, "vehicle_length", cfg.sim.vehicle_length);
    cfg.sim.vehicle_width = get_num(s, "vehicle_width", cfg.sim.vehicle_width);
    cfg.sim.accel_limit = get_num(s, "accel_limit", cfg.sim.accel_limit);
    cfg.sim.speed_gain = get_num(s, "speed_gain", cfg.sim.speed_gain);
    cfg.sim.brake_decel_threshold =
        get_num(s, "brake_decel_threshold", cfg.sim.brake_decel_threshold);
    cfg.sim.center_distance_gap = s.value("center_distance_gap", cfg.sim.center_distance_gap);
    cfg.sim.initial_speed_factor = get_num(s, "initial_speed_factor", cfg.sim.initial_speed_factor);
  }

  if (doc.contains("metrics")) {
    const json& m = doc.at("metrics");
    if (m.contains("weights")) cfg.metrics.weights = parse_weights(m.at("weights"));
    const std::string form = get_str(m, "fitness_form", "signed");
    if (form == "signed") {
      cfg.metrics.fitness_form = FitnessForm::kSigned;
    } else if (form == "unsigned_sum") {
      cfg.metrics.fitness_form = FitnessForm::kUnsignedSum;
    } else {
      throw Error("fitness_form must be signed|unsigned_sum");
    }
    if (m.contains("thresholds")) {
      const json& t = m.at("thresholds");
      cfg.metrics.thresholds.collision_min =
          get_int(t, "collision_min", cfg.metrics.thresholds.collision_min);
      cfg.metrics.thresholds.d_min_max = get_num(t, "d_min_max", cfg.metrics.thresholds.d_min_max);
      cfg.metrics.thresholds.v_d_min = get_num(t, "v_d_min", cfg.metrics.thresholds.v_d_min);
    }
    const std::string rule = get_str(m, "critical_rule", "collision_or_near_miss");
    if (rule == "collision_or_near_miss") {
      cfg.metrics.critical_rule = CriticalRule::kCollisionOrNearMiss;
    } else if (rule == "collision_only") {
      cfg.metrics.critical_rule = CriticalRule::kCollisionOnly;
    } else if (rule == "near_miss_only") {
      cfg.metrics.critical_rule = CriticalRule::kNearMissOnly;
    } else if (rule == "collision_and_near_miss") {
      cfg.metrics.critical_rule = CriticalRule::kCollisionAndNearMiss;
    } else {
      throw Error("unknown critical_rule: '" + rule + "'");
    }
    cfg.metrics.d_min_cap = get_num(m, "d_min_cap", cfg.metrics.d_min_cap);
  }

  if (doc.contains("optimizer")) {
    const json& o = doc.at("optimizer");
    cfg.algorithm = get_str(o, "algorithm", cfg.algorithm);
    if (o.contains("budget")) {
      cfg.budget.iterations = get_int(o.at("budget"), "iterations", cfg.budget.iterations);
      cfg.budget.population = get_int(o.at("budget"), "population", cfg.budget.population);
    }
    cfg.parallel = o.value("parallel", cfg.parallel);
    if (o.contains("algorithms")) {
      for (const json& a : o.at("algorithms")) {
        cfg.campaign_algorithms.push_back(a.get<std::string>());
      }
    }
    if (o.contains("pso")) {
      const json& p = o.at("pso");
      cfg.optimizers.pso.c1 = get_num(p, "c1", cfg.optimizers.pso.c1);
      cfg.optimizers.pso.c2 = get_num(p, "c2", cfg.optimizers.pso.c2);
      cfg.optimizers.pso.inertia = get_num(p, "inertia", cfg.optimizers.pso.inertia);
      cfg.optimizers.pso.velocity_clamp_fraction =
          get_num(p, "velocity_clamp_fraction", cfg.optimizers.pso.velocity_clamp_fraction);
    }
    if (o.contains("ga")) {
      const json& p = o.at("ga");
      cfg.optimizers.ga.crossover_prob = get_num(p, "crossover_prob", cfg.optimizers.ga.crossover_prob);
      cfg.optimizers.ga.mutation_prob = get_num(p, "mutation_prob", cfg.optimizers.ga.mutation_prob);
      cfg.optimizers.ga.mutation_sigma_fraction =
          get_num(p, "mutation_sigma_fraction", cfg.optimizers.ga.mutation_sigma_fraction);
      cfg.optimizers.ga.eta_crossover = get_num(p, "eta_crossover", cfg.optimizers.ga.eta_crossover);
    }
    if (o.contains("ppo")) {
      const json& p = o.at("ppo");
      cfg.optimizers.ppo.k_epochs = get_int(p, "k_epochs", cfg.optimizers.ppo.k_epochs);
      cfg.optimizers.ppo.gamma = get_num(p, "gamma", cfg.optimizers.ppo.gamma);
      cfg.optimizers.ppo.lr_actor = get_num(p, "lr_actor", cfg.optimizers.ppo.lr_actor);
      cfg.optimizers.ppo.lr_critic = get_num(p, "lr_critic", cfg.optimizers.ppo.lr_critic);
      cfg.optimizers.ppo.clip_epsilon = get_num(p, "clip_epsilon", cfg.optimizers.ppo.clip_epsilon);
      cfg.optimizers.ppo.initial_log_std =
          get_num(p, "initial_log_std", cfg.optimizers.ppo.initial_log_std);
    }
    if (o.contains("nsga2")) {
      const json& p = o.at("nsga2");
      cfg.optimizers.nsga2.crossover_prob =
          get_num(p, "crossover_prob", cfg.optimizers.nsga2.crossover_prob);
      cfg.optimizers.nsga2.mutation_prob =
          get_num(p, "mutation_prob", cfg.optimizers.nsga2.mutation_prob);
      cfg.optimizers.nsga2.eta_crossover =
          get_num(p, "eta_crossover", cfg.optimizers.nsga2.eta_crossover);
      cfg.optimizers.nsga2.eta_mutation =
          get_num(p, "eta_mutation", cfg.optimizers.nsga2.eta_mutation);
    }
  }

  if (doc.contains("emitter")) {
    const json& e = doc.at("emitter");
    cfg.emitter.xodr_filename = get_str(e, "xodr_filename", cfg.emitter.xodr_filename);
    cfg.emitter.author = get_str(e, "author", cfg.emitter.author);
    if (e.contains("fixed_timestamp")) {
      cfg.emitter.fixed_timestamp = e.at("fixed_timestamp").get<std::string>();
    }
  }

  if (doc.contains("ontology")) cfg.ontology_extensions = doc.at("ontology").dump();
  if (doc.contains("trigger")) {
    const json& t = doc.at("trigger");
    const std::string kind = get_str(t, "type", "sim_time");
    if (kind == "sim_time") {
      cfg.trigger.kind = TriggerSpec::Kind::kSimTime;
    } else if (kind == "relative_distance") {
      cfg.trigger.kind = TriggerSpec::Kind::kRelativeDistance;
    } else {
      throw Error("trigger type must be sim_time|relative_distance");
    }
    cfg.trigger.relative_distance =
        get_num(t, "relative_distance", cfg.trigger.relative_distance);
  }
  if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
  cfg.out_dir = get_str(doc, "out_dir", cfg.out_dir);
  cfg.report_speed_factor = get_num(doc, "report_speed_factor", cfg.report_speed_factor);

  cfg.validation_state.map = cfg.map;
  // Coupled baseline: overrides are judged against an otherwise consistent state.
  cfg.validation_state = repair(std::move(cfg.validation_state), cfg.constraints);
  if (doc.contains("weather")) parse_weather(doc.at("weather"), cfg.validation_state.weather);
  if (doc.contains("placements")) {
    for (const json& p : doc.at("placements")) {
      Placement placement;
      placement.id = p.at("id").get<std::string>();
      placement.kind = placement_kind_from(p.at("kind").get<std::string>());
      placement.position = {p.at("x").get<double>(), p.at("y").get<double>()};
      cfg.validation_state.placements.push_back(std::move(placement));
    }
  }
  if (doc.contains("participants")) {
    for (const json& p : doc.at("participants")) {
      cfg.validation_state.participants.push_back(
          {p.at("id").get<std::string>(), p.at("speed").get<double>()});
    }
  }
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

MetricSamples parse_metric_samples_csv(std::string_view text) {
  MetricSamples samples;
  std::istringstream stream{std::string(text)};
  std::string line;
  if (!std::getline(stream, line)) throw Error("empty metric samples CSV");

  std::istringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) {
    if (cell.empty()) throw Error("empty column name in metric samples CSV");
    const char suffix = cell.back();
    if (suffix != '+' && suffix != '-') {
      throw Error("metric column '" + cell + "' needs a +/- direction suffix");
    }
    samples.names.push_back(cell.substr(0, cell.size() - 1));
    samples.directions.push_back(suffix == '+' ? Direction::kBenefit : Direction::kCost);
  }
  if (samples.names.empty()) throw Error("metric samples CSV has no columns");

  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<double> values;
    while (std::getline(row, cell, ',')) values.push_back(parse_double(cell));
    if (values.size() != samples.names.size()) {
      throw Error("metric samples CSV row has wrong arity");
    }
    samples.rows.push_back(std::move(values));
  }
  if (samples.rows.size() < 2) throw Error("metric samples CSV needs at least two rows");
  return samples;
}

std::string weights_to_json(const MetricWeights& weights) {
  json doc;
  doc["names"] = weights.names;
  doc["weights"] = weights.weights;
  json dirs = json::array();
  for (Direction d : weights.directions) {
    dirs.push_back(d == Direction::kCost ? "cost" : "benefit");
  }
  doc["directions"] = std::move(dirs);
  return doc.dump(2);
}

MetricWeights weights_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("weights JSON: ") + e.what());
  }
  MetricWeights w;
  for (const json& n : doc.at("names")) w.names.push_back(n.get<std::string>());
  for (const json& v : doc.at("weights")) w.weights.push_back(v.get<double>());
  for (const json& d : doc.at("directions")) {
    w.directions.push_back(direction_from(d.get<std::string>()));
  }
  if (w.names.size() != w.weights.size() || w.names.size() != w.directions.size()) {
    throw Error("weights JSON arrays must have equal length");
  }
  return w;
}

}  // namespace scengen
