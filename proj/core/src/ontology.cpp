#include "scengen/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "scengen/errors.hpp"
#include "scengen/numeric.hpp"

namespace scengen {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  }
  return true;
}

}  // namespace

void ScenarioGraph::declare_class(std::string name, std::optional<std::string> parent) {
  if (!valid_token(name)) throw Error("invalid class name: '" + name + "'");
  if (classes_.count(name)) throw Error("class already declared: '" + name + "'");
  if (parent && !classes_.count(*parent)) {
    throw Error("parent class not declared: '" + *parent + "'");
  }
  classes_.emplace(name, ClassDef{name, std::move(parent)});
}

void ScenarioGraph::declare_property(PropertyDef def) {
  if (!valid_token(def.name)) throw Error("invalid property name: '" + def.name + "'");
  if (properties_.count(def.name)) throw Error("property already declared: '" + def.name + "'");
  if (!classes_.count(def.domain)) {
    throw Error("property domain not declared: '" + def.domain + "'");
  }
  if (def.kind == PropertyKind::kObjectProperty) {
    if (!classes_.count(def.range)) {
      throw Error("object property range not declared: '" + def.range + "'");
    }
  } else if (def.range != "real" && def.range != "text" && def.range != "boolean") {
    throw Error("data property range must be real|text|boolean, got '" + def.range + "'");
  }
  properties_.emplace(def.name, std::move(def));
}

Individual& ScenarioGraph::add_individual(std::string id, std::string class_name) {
  if (!valid_token(id)) throw Error("invalid individual id: '" + id + "'");
  if (individuals_.count(id)) throw Error("individual already exists: '" + id + "'");
  if (!classes_.count(class_name)) {
    throw Error("individual class not declared: '" + class_name + "'");
  }
  auto [it, _] = individuals_.emplace(id, Individual{id, std::move(class_name), {}});
  return it->second;
}

void ScenarioGraph::set_value(const std::string& individual, const std::string& property,
                              PropertyValue value) {
  auto it = individuals_.find(individual);
  if (it == individuals_.end()) throw Error("no such individual: '" + individual + "'");
  if (!properties_.count(property)) throw Error("no such property: '" + property + "'");
  it->second.properties.emplace(property, std::move(value));
}

bool ScenarioGraph::has_class(std::string_view name) const {
  return classes_.count(std::string(name)) > 0;
}

bool ScenarioGraph::is_subclass_of(std::string_view cls, std::string_view ancestor) const {
  std::string current(cls);
  for (int depth = 0; depth < 64; ++depth) {  // parent links are acyclic by construction
    if (current == ancestor) return true;
    auto it = classes_.find(current);
    if (it == classes_.end() || !it->second.parent) return false;
    current = *it->second.parent;
  }
  return false;
}

const Individual* ScenarioGraph::find_individual(std::string_view id) const {
  auto it = individuals_.find(std::string(id));
  return it == individuals_.end() ? nullptr : &it->second;
}

std::vector<const Individual*> ScenarioGraph::individuals_of(std::string_view ancestor) const {
  std::vector<const Individual*> out;
  for (const auto& [id, ind] : individuals_) {
    if (is_subclass_of(ind.class_name, ancestor)) out.push_back(&ind);
  }
  return out;
}

bool ScenarioGraph::operator==(const ScenarioGraph& other) const {
  auto class_eq = [](const ClassDef& a, const ClassDef& b) {
    return a.name == b.name && a.parent == b.parent;
  };
  auto prop_eq = [](const PropertyDef& a, const PropertyDef& b) {
    return a.name == b.name && a.kind == b.kind && a.domain == b.domain && a.range == b.range;
  };
  if (classes_.size() != other.classes_.size() ||
      properties_.size() != other.properties_.size() ||
      individuals_.size() != other.individuals_.size()) {
    return false;
  }
  for (const auto& [name, def] : classes_) {
    auto it = other.classes_.find(name);
    if (it == other.classes_.end() || !class_eq(def, it->second)) return false;
  }
  for (const auto& [name, def] : properties_) {
    auto it = other.properties_.find(name);
    if (it == other.properties_.end() || !prop_eq(def, it->second)) return false;
  }
  for (const auto& [id, ind] : individuals_) {
    auto it = other.individuals_.find(id);
    if (it == other.individuals_.end() || ind.class_name != it->second.class_name) return false;
    // Multimaps compare equal as sorted multisets of (key, value).
    auto lhs = std::vector<std::pair<std::string, PropertyValue>>(ind.properties.begin(),
                                                                  ind.properties.end());
    auto rhs = std::vector<std::pair<std::string, PropertyValue>>(
        it->second.properties.begin(), it->second.properties.end());
    if (lhs.size() != rhs.size()) return false;
    auto value_key = [](const PropertyValue& v) {
      if (std::holds_alternative<ObjectRef>(v)) return "o:" + std::get<ObjectRef>(v).id;
      if (std::holds_alternative<double>(v)) return "d:" + format_exact(std::get<double>(v));
      if (std::holds_alternative<bool>(v))
        return std::string(std::get<bool>(v) ? "b:true" : "b:false");
      return "s:" + std::get<std::string>(v);
    };
    auto sort_key = [&](const std::pair<std::string, PropertyValue>& p) {
      return p.first + "\x1f" + value_key(p.second);
    };
    std::sort(lhs.begin(), lhs.end(), [&](const auto& a, const auto& b) {
      return sort_key(a) < sort_key(b);
    });
    std::sort(rhs.begin(), rhs.end(), [&](const auto& a, const auto& b) {
      return sort_key(a) < sort_key(b);
    });
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i].first != rhs[i].first || sort_key(lhs[i]) != sort_key(rhs[i])) return false;
    }
  }
  return true;
}

ScenarioGraph build_template() {
  ScenarioGraph g;

  g.declare_class("ScenarioElement");
  g.declare_class("Static", "ScenarioElement");
  g.declare_class("AreaEntities", "Static");
  g.declare_class("PointEntities", "Static");
  g.declare_class("TrafficLight", "PointEntities");
  g.declare_class("Signage", "PointEntities");
  g.declare_class("ConstructionCard", "PointEntities");
  g.declare_class("RoadCone", "PointEntities");
  g.declare_class("Event", "ScenarioElement");
  g.declare_class("TrafficAccident", "Event");
  g.declare_class("TrafficJam", "Event");
  g.declare_class("EnvironmentChangeEvent", "Event");
  g.declare_class("TrafficParticipant", "ScenarioElement");
  g.declare_class("Pedestrian", "TrafficParticipant");
  g.declare_class("Vehicle", "TrafficParticipant");
  g.declare_class("Bicycle", "TrafficParticipant");
  g.declare_class("Misc", "TrafficParticipant");
  g.declare_class("Action", "ScenarioElement");
  g.declare_class("SpeedAction", "Action");
  g.declare_class("LaneChangeAction", "Action");
  g.declare_class("TeleportAction", "Action");
  g.declare_class("Weather", "ScenarioElement");
  g.declare_class("Fog", "Weather");
  g.declare_class("Rain", "Weather");
  g.declare_class("Sun", "Weather");
  g.declare_class("Trigger", "ScenarioElement");

  g.declare_property({"hasSun", PropertyKind::kObjectProperty, "Weather", "Sun"});
  g.declare_property({"hasAction", PropertyKind::kObjectProperty, "TrafficParticipant", "Action"});
  g.declare_property(
      {"hasEnvironment", PropertyKind::kObjectProperty, "EnvironmentChangeEvent", "Weather"});
  g.declare_property({"hasTrigger", PropertyKind::kObjectProperty, "Event", "Trigger"});
  g.declare_property({"hasActor", PropertyKind::kObjectProperty, "Event", "TrafficParticipant"});
  g.declare_property({"hasEventAction", PropertyKind::kObjectProperty, "Event", "Action"});

  for (const char* name : {"has_world_x", "has_world_y", "has_world_z", "has_world_pitch",
                           "has_world_yaw", "has_world_roll"}) {
    g.declare_property({name, PropertyKind::kDataProperty, "ScenarioElement", "real"});
  }
  g.declare_property({"has_weather", PropertyKind::kDataProperty, "Weather", "text"});
  g.declare_property({"has_target_speed", PropertyKind::kDataProperty, "SpeedAction", "real"});
  g.declare_property({"has_route_start", PropertyKind::kDataProperty, "TrafficParticipant", "text"});
  g.declare_property({"has_route_end", PropertyKind::kDataProperty, "TrafficParticipant", "text"});
  g.declare_property({"has_trigger_type", PropertyKind::kDataProperty, "Trigger", "text"});
  g.declare_property({"has_trigger_value", PropertyKind::kDataProperty, "Trigger", "real"});
  g.declare_property({"has_altitude", PropertyKind::kDataProperty, "Sun", "real"});
  g.declare_property({"has_azimuth", PropertyKind::kDataProperty, "Sun", "real"});
  for (const char* name :
       {"has_cloud_cover", "has_precipitation_intensity", "has_precipitation_deposits",
        "has_wind_speed", "has_fog_density", "has_fog_distance", "has_fog_falloff",
        "has_wetness", "has_friction"}) {
    g.declare_property({name, PropertyKind::kDataProperty, "Weather", "real"});
  }
  for (const char* name : {"has_lane_width", "has_lanes_per_approach", "has_approach_length",
                           "has_junction_half_width"}) {
    g.declare_property({name, PropertyKind::kDataProperty, "AreaEntities", "real"});
  }
  return g;
}

void extend_template(ScenarioGraph& graph, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("template extension JSON: ") + e.what());
  }
  if (doc.contains("classes")) {
    for (const auto& item : doc.at("classes")) {
      std::optional<std::string> parent;
      if (item.contains("parent")) parent = item.at("parent").get<std::string>();
      graph.declare_class(item.at("name").get<std::string>(), std::move(parent));
    }
  }
  if (doc.contains("properties")) {
    for (const auto& item : doc.at("properties")) {
      PropertyDef def;
      def.name = item.at("name").get<std::string>();
      const std::string kind = item.value("kind", std::string("data"));
      if (kind == "object") {
        def.kind = PropertyKind::kObjectProperty;
      } else if (kind == "data") {
        def.kind = PropertyKind::kDataProperty;
      } else {
        throw Error("property kind must be object|data, got '" + kind + "'");
      }
      def.domain = item.at("domain").get<std::string>();
      def.range = item.at("range").get<std::string>();
      graph.declare_property(std::move(def));
    }
  }
}

namespace {

double named_or(const std::map<std::string, double>& named, const std::string& key,
                double fallback) {
  auto it = named.find(key);
  return it == named.end() ? fallback : it->second;
}

std::string weather_tag(const WeatherState& w) {
  if (w.precipitation_intensity > 50.0) return "rain";
  if (w.fog_density > 50.0) return "fog";
  if (w.cloud_cover > 50.0) return "overcast";
  return "clear";
}

}  // namespace

ScenarioGraph instantiate(const ScenarioGraph& tmpl, const LogicalScenario& logical,
                          const SearchSpace& space, const ScenarioVector& v,
                          const CrossroadMap& map, const ConstraintConfig& cfg,
                          const TriggerSpec& trigger) {
  if (!within_bounds(space, v)) throw Error("vector out of bounds; clamp before instantiating");
  const auto named = decode(space, v);

  const double ego_target = named_or(
      named, "ego_speed",
      logical.ego_sim_speed_override ? *logical.ego_sim_speed_override : logical.ego_speed);
  const double bv_target = named_or(named, "bv_speed", logical.bv_speed);
  const double bv_delay = named_or(named, "bv_spawn_delay", 0.0);
  const double ego_offset = named_or(named, "ego_spawn_offset", 0.0);

  // Weather parameters from the vector (when searched) drive a repaired state.
  ScenarioState state;
  state.map = map.geometry;
  state.weather.fog_density = named_or(named, "fog_density", 0.0);
  state.weather.precipitation_intensity = named_or(named, "precipitation_intensity", 0.0);
  state.weather.cloud_cover = named_or(named, "cloud_cover", 0.0);
  state.weather.wind_speed = named_or(named, "wind_speed", 0.0);
  state.weather.wetness = named_or(named, "wetness", 0.0);
  state.weather.sun_altitude = named_or(named, "sun_altitude", 50.0);
  state.participants.push_back({"ego", ego_target});
  state.participants.push_back({"bv", bv_target});
  state = repair(std::move(state), cfg);
  const auto leftover = validate(state, cfg);
  if (!leftover.empty()) {
    throw Error("constraint violation after repair: " + leftover.front().rule_id);
  }
  const WeatherState& w = state.weather;
  const double ego_speed_final = state.participants[0].speed;
  const double bv_speed_final = state.participants[1].speed;

  ScenarioGraph g = tmpl;

  g.add_individual("crossroad_area", "AreaEntities");
  g.set_value("crossroad_area", "has_lane_width", map.geometry.lane_width);
  g.set_value("crossroad_area", "has_lanes_per_approach",
              static_cast<double>(map.geometry.lanes_per_approach));
  g.set_value("crossroad_area", "has_approach_length", map.geometry.approach_length);
  g.set_value("crossroad_area", "has_junction_half_width", map.geometry.junction_half_width);

  const PathPlan ego_path = plan_path(map, logical.ego_start, logical.ego_end);
  const PathPlan bv_path = plan_path(map, logical.bv_start, logical.bv_end);
  const auto ego_pose = ego_path.pose_at(clamp(ego_offset, 0.0, ego_path.length()));
  const auto bv_pose = bv_path.pose_at(0.0);

  auto add_vehicle = [&](const std::string& id, const PathPlan& path,
                         const PathPlan::Pose& pose, double speed) {
    g.add_individual(id, "Vehicle");
    g.set_value(id, "has_route_start", path.start());
    g.set_value(id, "has_route_end", path.end());

    const std::string teleport = id + "_teleport";
    g.add_individual(teleport, "TeleportAction");
    g.set_value(teleport, "has_world_x", pose.position.x);
    g.set_value(teleport, "has_world_y", pose.position.y);
    g.set_value(teleport, "has_world_z", 0.0);
    g.set_value(teleport, "has_world_yaw", pose.heading);
    g.set_value(id, "hasAction", ObjectRef{teleport});

    const std::string speed_action = id + "_speed";
    g.add_individual(speed_action, "SpeedAction");
    g.set_value(speed_action, "has_target_speed", speed);
    return speed_action;
  };

  const std::string ego_speed_action =
      add_vehicle("ego", ego_path, ego_pose, ego_speed_final);
  g.set_value("ego", "hasAction", ObjectRef{ego_speed_action});
  const std::string bv_speed_action = add_vehicle("bv", bv_path, bv_pose, bv_speed_final);

  g.add_individual("weather_state", "Weather");
  g.set_value("weather_state", "has_weather", weather_tag(w));
  g.set_value("weather_state", "has_cloud_cover", w.cloud_cover);
  g.set_value("weather_state", "has_precipitation_intensity", w.precipitation_intensity);
  g.set_value("weather_state", "has_precipitation_deposits", w.precipitation_deposits);
  g.set_value("weather_state", "has_wind_speed", w.wind_speed);
  g.set_value("weather_state", "has_fog_density", w.fog_density);
  g.set_value("weather_state", "has_fog_distance", w.fog_distance);
  g.set_value("weather_state", "has_fog_falloff", w.fog_falloff);
  g.set_value("weather_state", "has_wetness", w.wetness);
  g.set_value("weather_state", "has_friction", w.friction);
  g.add_individual("sun", "Sun");
  g.set_value("sun", "has_altitude", w.sun_altitude);
  g.set_value("sun", "has_azimuth", w.sun_azimuth);
  g.set_value("weather_state", "hasSun", ObjectRef{"sun"});

  g.add_individual("environment_trigger", "Trigger");
  g.set_value("environment_trigger", "has_trigger_type", std::string("sim_time"));
  g.set_value("environment_trigger", "has_trigger_value", 0.0);
  g.add_individual("environment_change", "EnvironmentChangeEvent");
  g.set_value("environment_change", "hasEnvironment", ObjectRef{"weather_state"});
  g.set_value("environment_change", "hasTrigger", ObjectRef{"environment_trigger"});

  // The background vehicle starts moving when its spawn trigger fires.
  const bool by_distance = trigger.kind == TriggerSpec::Kind::kRelativeDistance;
  g.add_individual("bv_spawn_trigger", "Trigger");
  g.set_value("bv_spawn_trigger", "has_trigger_type",
              std::string(by_distance ? "relative_distance" : "sim_time"));
  g.set_value("bv_spawn_trigger", "has_trigger_value",
              by_distance ? trigger.relative_distance : bv_delay);
  g.add_individual("bv_spawn_event", "Event");
  g.set_value("bv_spawn_event", "hasActor", ObjectRef{"bv"});
  g.set_value("bv_spawn_event", "hasEventAction", ObjectRef{bv_speed_action});
  g.set_value("bv_spawn_event", "hasTrigger", ObjectRef{"bv_spawn_trigger"});

  const auto violations = check_conformance(g);
  if (!violations.empty()) {
    throw Error("instantiated graph is not conformant: " + violations.front().message);
  }
  return g;
}

std::vector<Violation> check_conformance(const ScenarioGraph& graph) {
  std::vector<Violation> out;
  auto report = [&out](std::string rule, std::string message) {
    out.push_back({std::move(rule), std::move(message), {}});
  };

  for (const auto& [name, def] : graph.classes()) {
    if (def.parent && !graph.has_class(*def.parent)) {
      report("class_parent", "class '" + name + "' has undeclared parent '" + *def.parent + "'");
    }
  }
  for (const auto& [name, def] : graph.properties()) {
    if (!graph.has_class(def.domain)) {
      report("property_domain_decl",
             "property '" + name + "' has undeclared domain '" + def.domain + "'");
    }
    if (def.kind == PropertyKind::kObjectProperty && !graph.has_class(def.range)) {
      report("property_range_decl",
             "property '" + name + "' has undeclared range '" + def.range + "'");
    }
  }

  for (const auto& [id, ind] : graph.individuals()) {
    if (!graph.has_class(ind.class_name)) {
      report("individual_class", "individual '" + id + "' has undeclared class '" +
                                     ind.class_name + "'");
      continue;
    }
    for (const auto& [prop_name, value] : ind.properties) {
      auto pit = graph.properties().find(prop_name);
      if (pit == graph.properties().end()) {
        report("undeclared_property",
               "individual '" + id + "' uses undeclared property '" + prop_name + "'");
        continue;
      }
      const PropertyDef& def = pit->second;
      if (!graph.is_subclass_of(ind.class_name, def.domain)) {
        report("domain", "individual '" + id + "' of class '" + ind.class_name +
                             "' is outside the domain '" + def.domain + "' of property '" +
                             prop_name + "'");
      }
      if (def.kind == PropertyKind::kObjectProperty) {
        if (!std::holds_alternative<ObjectRef>(value)) {
          report("range", "object property '" + prop_name + "' on '" + id +
                              "' must reference an individual");
          continue;
        }
        const std::string& target = std::get<ObjectRef>(value).id;
        const Individual* ref = graph.find_individual(target);
        if (!ref) {
          report("dangling_ref", "individual '" + id + "' references missing individual '" +
                                     target + "' via '" + prop_name + "'");
        } else if (!graph.is_subclass_of(ref->class_name, def.range)) {
          report("range", "property '" + prop_name + "' on '" + id + "' requires range '" +
                              def.range + "' but '" + target + "' is a '" + ref->class_name +
                              "'");
        }
      } else {
        const bool ok = (def.range == "real" && std::holds_alternative<double>(value)) ||
                        (def.range == "text" && std::holds_alternative<std::string>(value)) ||
                        (def.range == "boolean" && std::holds_alternative<bool>(value));
        if (!ok) {
          report("range", "data property '" + prop_name + "' on '" + id +
                              "' must carry a " + def.range + " literal");
        }
      }
    }
  }
  return out;
}

ScenarioState scenario_state_from_graph(const ScenarioGraph& graph, const StaticMapSpec& map) {
  ScenarioState state;
  state.map = map;

  auto real_of = [&](const Individual& ind, const std::string& prop,
                     double fallback) -> double {
    auto it = ind.properties.find(prop);
    if (it == ind.properties.end() || !std::holds_alternative<double>(it->second)) {
      return fallback;
    }
    return std::get<double>(it->second);
  };

  for (const Individual* weather : graph.individuals_of("Weather")) {
    if (weather->class_name != "Weather") continue;
    WeatherState& w = state.weather;
    w.cloud_cover = real_of(*weather, "has_cloud_cover", w.cloud_cover);
    w.precipitation_intensity =
        real_of(*weather, "has_precipitation_intensity", w.precipitation_intensity);
    w.precipitation_deposits =
        real_of(*weather, "has_precipitation_deposits", w.precipitation_deposits);
    w.wind_speed = real_of(*weather, "has_wind_speed", w.wind_speed);
    w.fog_density = real_of(*weather, "has_fog_density", w.fog_density);
    w.fog_distance = real_of(*weather, "has_fog_distance", w.fog_distance);
    w.fog_falloff = real_of(*weather, "has_fog_falloff", w.fog_falloff);
    w.wetness = real_of(*weather, "has_wetness", w.wetness);
    w.friction = real_of(*weather, "has_friction", w.friction);
    auto sun_ref = weather->properties.find("hasSun");
    if (sun_ref != weather->properties.end() &&
        std::holds_alternative<ObjectRef>(sun_ref->second)) {
      if (const Individual* sun =
              graph.find_individual(std::get<ObjectRef>(sun_ref->second).id)) {
        w.sun_altitude = real_of(*sun, "has_altitude", w.sun_altitude);
        w.sun_azimuth = real_of(*sun, "has_azimuth", w.sun_azimuth);
      }
    }
  }

  for (const Individual* participant : graph.individuals_of("TrafficParticipant")) {
    double speed = 0.0;
    for (const auto& [prop, value] : participant->properties) {
      if (prop != "hasAction" || !std::holds_alternative<ObjectRef>(value)) continue;
      const Individual* action = graph.find_individual(std::get<ObjectRef>(value).id);
      if (action && action->class_name == "SpeedAction") {
        speed = real_of(*action, "has_target_speed", 0.0);
      }
    }
    state.participants.push_back({participant->id, speed});
  }
  return state;
}

}  // namespace scengen
