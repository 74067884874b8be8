#include "scengen/openx.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "scengen/numeric.hpp"
#include "scengen/xml.hpp"

namespace scengen {

namespace {

std::string header_date(const EmitterOptions& opts) {
  if (opts.fixed_timestamp) return *opts.fixed_timestamp;
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&tt, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm_utc);
  return buf;
}

std::string num(double v) { return format_sig(v, 6); }

struct Writer {
  std::ostringstream out;
  int depth = 0;

  void line(const std::string& s) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << s << '\n';
  }
  void open(const std::string& s) {
    line(s);
    ++depth;
  }
  void close(const std::string& tag) {
    --depth;
    line("</" + tag + ">");
  }
};

struct Attr {
  std::string key;
  std::string value;
};

std::string tag(const std::string& name, const std::vector<Attr>& attrs, bool self_close) {
  std::string s = "<" + name;
  for (const Attr& a : attrs) s += " " + a.key + "=\"" + xml_escape(a.value) + "\"";
  s += self_close ? "/>" : ">";
  return s;
}

// ---- OpenDRIVE -------------------------------------------------------------

// Inbound travel heading of approach a (0=E 1=N 2=W 3=S).
double inbound_heading(int a) {
  static const double h[4] = {std::numbers::pi, -std::numbers::pi / 2.0, 0.0,
                              std::numbers::pi / 2.0};
  return h[a & 3];
}

Vec2 outward_unit(int a) {
  switch (a & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Vec2 rot90ccw(Vec2 v) { return {-v.y, v.x}; }

void write_lane(Writer& w, int id, double width) {
  w.open(tag("lane", {{"id", std::to_string(id)}, {"type", "driving"}, {"level", "false"}},
             false));
  w.line(tag("link", {}, true));
  w.line(tag("width",
             {{"sOffset", "0"}, {"a", num(width)}, {"b", "0"}, {"c", "0"}, {"d", "0"}},
             true));
  w.close("lane");
}

void write_lane_section(Writer& w, int lanes_per_side, double width, bool both_sides) {
  w.open(tag("lanes", {}, false));
  w.open(tag("laneSection", {{"s", "0"}}, false));
  w.open(tag("left", {}, false));
  for (int i = lanes_per_side; i >= 1; --i) write_lane(w, i, width);
  w.close("left");
  w.open(tag("center", {}, false));
  w.line(tag("lane", {{"id", "0"}, {"type", "none"}, {"level", "false"}}, true));
  w.close("center");
  if (both_sides) {
    w.open(tag("right", {}, false));
    for (int i = 1; i <= lanes_per_side; ++i) write_lane(w, -i, width);
    w.close("right");
  }
  w.close("laneSection");
  w.close("lanes");
}

}  // namespace

std::string emit_xodr(const StaticMapSpec& map, const EmitterOptions& opts) {
  map.validate();
  opts.validate();

  const double h = map.junction_half_width;
  const double d = map.lane_width * 0.5;
  const double reach = h + map.approach_length;

  Writer w;
  w.line("<?xml version=\"1.0\" standalone=\"yes\"?>");
  w.open("<OpenDRIVE>");
  w.line(tag("header",
             {{"revMajor", "1"},
              {"revMinor", "6"},
              {"name", "crossroad"},
              {"version", "1.00"},
              {"date", header_date(opts)},
              {"north", num(reach)},
              {"south", num(-reach)},
              {"east", num(reach)},
              {"west", num(-reach)},
              {"vendor", opts.author}},
             true));

  // Approach roads 1..4, reference line from the junction edge outward.
  for (int a = 0; a < 4; ++a) {
    const Vec2 u = outward_unit(a);
    const Vec2 start = u * h;
    const double hdg = std::atan2(u.y, u.x);
    w.open(tag("road",
               {{"name", "approach_" + std::to_string(a + 1)},
                {"length", num(map.approach_length)},
                {"id", std::to_string(a + 1)},
                {"junction", "-1"}},
               false));
    w.open(tag("link", {}, false));
    w.line(tag("predecessor",
               {{"elementType", "junction"}, {"elementId", "100"}},
               true));
    w.close("link");
    w.open(tag("planView", {}, false));
    w.open(tag("geometry",
               {{"s", "0"},
                {"x", num(start.x)},
                {"y", num(start.y)},
                {"hdg", num(hdg)},
                {"length", num(map.approach_length)}},
               false));
    w.line("<line/>");
    w.close("geometry");
    w.close("planView");
    write_lane_section(w, map.lanes_per_approach, map.lane_width, true);
    w.close("road");
  }

  // Connecting roads: one per legal movement. Road ids 10 + 3*a + k.
  struct Movement {
    int id;
    int from;
    int to;
  };
  std::vector<Movement> movements;
  for (int a = 0; a < 4; ++a) {
    int k = 0;
    for (int diff : {1, 2, 3}) {
      movements.push_back({10 + 3 * a + k, a, (a + diff) & 3});
      ++k;
    }
  }

  for (const Movement& m : movements) {
    const Vec2 ua = outward_unit(m.from);
    const Vec2 entry_offset = rot90ccw(ua * -1.0);
    const Vec2 start = ua * h + entry_offset * d;
    const double hdg = inbound_heading(m.from);
    const int diff = (m.to - m.from + 4) & 3;

    std::string geometry_child;
    double length = 0.0;
    if (diff == 2) {
      length = 2.0 * h;
      geometry_child = "<line/>";
    } else {
      const double radius = diff == 1 ? h + d : h - d;
      const double curvature = diff == 1 ? -1.0 / radius : 1.0 / radius;
      length = radius * std::numbers::pi / 2.0;
      geometry_child = tag("arc", {{"curvature", num(curvature)}}, true);
    }

    w.open(tag("road",
               {{"name", "connect_" + std::to_string(m.from + 1) + "_" +
                             std::to_string(m.to + 1)},
                {"length", num(length)},
                {"id", std::to_string(m.id)},
                {"junction", "100"}},
               false));
    w.open(tag("link", {}, false));
    w.line(tag("predecessor",
               {{"elementType", "road"},
                {"elementId", std::to_string(m.from + 1)},
                {"contactPoint", "start"}},
               true));
    w.line(tag("successor",
               {{"elementType", "road"},
                {"elementId", std::to_string(m.to + 1)},
                {"contactPoint", "start"}},
               true));
    w.close("link");
    w.open(tag("planView", {}, false));
    w.open(tag("geometry",
               {{"s", "0"},
                {"x", num(start.x)},
                {"y", num(start.y)},
                {"hdg", num(hdg)},
                {"length", num(length)}},
               false));
    w.line(geometry_child);
    w.close("geometry");
    w.close("planView");
    write_lane_section(w, 1, map.lane_width, false);
    w.close("road");
  }

  w.open(tag("junction", {{"id", "100"}, {"name", "junction"}}, false));
  int connection_id = 0;
  for (const Movement& m : movements) {
    w.open(tag("connection",
               {{"id", std::to_string(connection_id++)},
                {"incomingRoad", std::to_string(m.from + 1)},
                {"connectingRoad", std::to_string(m.id)},
                {"contactPoint", "start"}},
               false));
    w.line(tag("laneLink", {{"from", "1"}, {"to", "1"}}, true));
    w.close("connection");
  }
  w.close("junction");

  w.close("OpenDRIVE");
  return w.out.str();
}

// ---- OpenSCENARIO ----------------------------------------------------------

namespace {

double real_prop(const Individual& ind, const std::string& prop, double fallback = 0.0) {
  auto it = ind.properties.find(prop);
  if (it == ind.properties.end() || !std::holds_alternative<double>(it->second)) return fallback;
  return std::get<double>(it->second);
}

std::string text_prop(const Individual& ind, const std::string& prop,
                      const std::string& fallback = {}) {
  auto it = ind.properties.find(prop);
  if (it == ind.properties.end() || !std::holds_alternative<std::string>(it->second)) {
    return fallback;
  }
  return std::get<std::string>(it->second);
}

const Individual* ref_prop(const ScenarioGraph& g, const Individual& ind,
                           const std::string& prop) {
  auto it = ind.properties.find(prop);
  if (it == ind.properties.end() || !std::holds_alternative<ObjectRef>(it->second)) {
    return nullptr;
  }
  return g.find_individual(std::get<ObjectRef>(it->second).id);
}

struct WeatherView {
  const Individual* weather = nullptr;
  const Individual* sun = nullptr;
};

WeatherView find_weather(const ScenarioGraph& g) {
  WeatherView view;
  for (const Individual* ind : g.individuals_of("Weather")) {
    if (ind->class_name == "Weather") {
      view.weather = ind;
      view.sun = ref_prop(g, *ind, "hasSun");
      break;
    }
  }
  return view;
}

void write_environment(Writer& w, const ScenarioGraph& g) {
  const WeatherView view = find_weather(g);
  w.open(tag("EnvironmentAction", {}, false));
  w.open(tag("Environment", {{"name", "environment"}}, false));
  w.line(tag("TimeOfDay",
             {{"animation", "false"}, {"dateTime", "2023-06-01T12:00:00"}},
             true));
  if (view.weather) {
    const Individual& wi = *view.weather;
    const double cloud = real_prop(wi, "has_cloud_cover");
    const double precipitation = real_prop(wi, "has_precipitation_intensity");
    std::string cloud_state = "free";
    if (precipitation > 0.0) cloud_state = "rainy";
    else if (cloud > 85.0) cloud_state = "overcast";
    else if (cloud > 40.0) cloud_state = "cloudy";
    w.open(tag("Weather",
               {{"cloudState", cloud_state},
                {"cloudCover", num(cloud)},
                {"windSpeed", num(real_prop(wi, "has_wind_speed"))}},
               false));
    if (view.sun) {
      w.line(tag("Sun",
                 {{"intensity", "1"},
                  {"azimuth", num(real_prop(*view.sun, "has_azimuth"))},
                  {"elevation", num(real_prop(*view.sun, "has_altitude"))}},
                 true));
    }
    w.line(tag("Fog",
               {{"visualRange", num(real_prop(wi, "has_fog_distance"))},
                {"density", num(real_prop(wi, "has_fog_density"))},
                {"falloff", num(real_prop(wi, "has_fog_falloff"))}},
               true));
    w.line(tag("Precipitation",
               {{"precipitationType", precipitation > 0.0 ? "rain" : "dry"},
                {"intensity", num(precipitation)},
                {"deposits", num(real_prop(wi, "has_precipitation_deposits"))}},
               true));
    w.close("Weather");
    w.line(tag("RoadCondition",
               {{"frictionScaleFactor", num(real_prop(wi, "has_friction"))},
                {"wetness", num(real_prop(wi, "has_wetness"))}},
               true));
  }
  w.close("Environment");
  w.close("EnvironmentAction");
}

void write_speed_action(Writer& w, double target) {
  w.open(tag("LongitudinalAction", {}, false));
  w.open(tag("SpeedAction", {}, false));
  w.line(tag("SpeedActionDynamics",
             {{"dynamicsShape", "step"}, {"value", "0"}, {"dynamicsDimension", "time"}},
             true));
  w.open(tag("SpeedActionTarget", {}, false));
  w.line(tag("AbsoluteTargetSpeed", {{"value", num(target)}}, true));
  w.close("SpeedActionTarget");
  w.close("SpeedAction");
  w.close("LongitudinalAction");
}

void write_trigger(Writer& w, const std::string& element, const std::string& name,
                   const Individual* trigger, const std::string& actor) {
  w.open(tag(element, {}, false));
  w.open(tag("ConditionGroup", {}, false));
  const std::string type = trigger ? text_prop(*trigger, "has_trigger_type", "sim_time")
                                   : std::string("sim_time");
  const double value = trigger ? real_prop(*trigger, "has_trigger_value") : 0.0;
  w.open(tag("Condition",
             {{"name", name}, {"delay", "0"}, {"conditionEdge", "rising"}},
             false));
  if (type == "relative_distance" && !actor.empty()) {
    w.open(tag("ByEntityCondition", {}, false));
    w.open(tag("TriggeringEntities", {{"triggeringEntitiesRule", "any"}},
               false));
    w.line(tag("EntityRef", {{"entityRef", actor}}, true));
    w.close("TriggeringEntities");
    w.open(tag("EntityCondition", {}, false));
    w.line(tag("RelativeDistanceCondition",
               {{"entityRef", "ego"},
                {"relativeDistanceType", "cartesianDistance"},
                {"value", num(value)},
                {"freespace", "false"},
                {"rule", "lessThan"}},
               true));
    w.close("EntityCondition");
    w.close("ByEntityCondition");
  } else {
    w.open(tag("ByValueCondition", {}, false));
    w.line(tag("SimulationTimeCondition",
               {{"value", num(value)}, {"rule", "greaterOrEqual"}},
               true));
    w.close("ByValueCondition");
  }
  w.close("Condition");
  w.close("ConditionGroup");
  w.close(element);
}

}  // namespace

std::string emit_xosc(const ScenarioGraph& graph, const EmitterOptions& opts) {
  opts.validate();
  const auto violations = check_conformance(graph);
  if (!violations.empty()) {
    throw Error("refusing to emit non-conformant graph: " + violations.front().message);
  }

  // Speed actions claimed by story events stay out of the init section.
  std::vector<const Individual*> events = graph.individuals_of("Event");
  std::map<std::string, const Individual*> event_of_action;
  for (const Individual* e : events) {
    if (const Individual* action = ref_prop(graph, *e, "hasEventAction")) {
      event_of_action[action->id] = e;
    }
  }

  Writer w;
  w.line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  w.open("<OpenSCENARIO>");
  w.line(tag("FileHeader",
             {{"revMajor", "1"},
              {"revMinor", "0"},
              {"date", header_date(opts)},
              {"description", "generated crossroad scenario"},
              {"author", opts.author}},
             true));
  w.line(tag("CatalogLocations", {}, true));
  w.open(tag("RoadNetwork", {}, false));
  w.line(tag("LogicFile", {{"filepath", opts.xodr_filename}}, true));
  w.close("RoadNetwork");

  const auto participants = graph.individuals_of("TrafficParticipant");

  w.open(tag("Entities", {}, false));
  for (const Individual* p : participants) {
    const bool pedestrian = graph.is_subclass_of(p->class_name, "Pedestrian");
    w.open(tag("ScenarioObject", {{"name", p->id}}, false));
    w.open(tag(pedestrian ? "Pedestrian" : "Vehicle",
               pedestrian
                   ? std::vector<Attr>{{"name", p->id},
                                       {"model", "walker"},
                                       {"mass", "80"},
                                       {"pedestrianCategory", "pedestrian"}}
                   : std::vector<Attr>{{"name", p->id}, {"vehicleCategory", "car"}},
               false));
    w.open(tag("BoundingBox", {}, false));
    w.line(tag("Center", {{"x", "0"}, {"y", "0"}, {"z", "0.9"}}, true));
    w.line(tag("Dimensions", {{"width", "2"}, {"length", "4.5"}, {"height", "1.8"}}, true));
    w.close("BoundingBox");
    if (!pedestrian) {
      w.line(tag("Performance",
                 {{"maxSpeed", "60"}, {"maxAcceleration", "5"}, {"maxDeceleration", "9"}},
                 true));
      w.open(tag("Axles", {}, false));
      w.line(tag("FrontAxle",
                 {{"maxSteering", "0.5"},
                  {"wheelDiameter", "0.6"},
                  {"trackWidth", "1.8"},
                  {"positionX", "3.1"},
                  {"positionZ", "0.3"}},
                 true));
      w.line(tag("RearAxle",
                 {{"maxSteering", "0"},
                  {"wheelDiameter", "0.6"},
                  {"trackWidth", "1.8"},
                  {"positionX", "0"},
                  {"positionZ", "0.3"}},
                 true));
      w.close("Axles");
    }
    w.line(tag("Properties", {}, true));
    w.close(pedestrian ? "Pedestrian" : "Vehicle");
    w.close("ScenarioObject");
  }
  w.close("Entities");

  w.open(tag("Storyboard", {}, false));
  w.open(tag("Init", {}, false));
  w.open(tag("Actions", {}, false));
  w.open(tag("GlobalAction", {}, false));
  write_environment(w, graph);
  w.close("GlobalAction");

  for (const Individual* p : participants) {
    w.open(tag("Private", {{"entityRef", p->id}}, false));
    auto range = p->properties.equal_range("hasAction");
    for (auto it = range.first; it != range.second; ++it) {
      if (!std::holds_alternative<ObjectRef>(it->second)) continue;
      const Individual* action = graph.find_individual(std::get<ObjectRef>(it->second).id);
      if (!action) continue;
      if (action->class_name == "TeleportAction") {
        w.open(tag("PrivateAction", {}, false));
        w.open(tag("TeleportAction", {}, false));
        w.open(tag("Position", {}, false));
        w.line(tag("WorldPosition",
                   {{"x", num(real_prop(*action, "has_world_x"))},
                    {"y", num(real_prop(*action, "has_world_y"))},
                    {"z", num(real_prop(*action, "has_world_z"))},
                    {"h", num(real_prop(*action, "has_world_yaw"))}},
                   true));
        w.close("Position");
        w.close("TeleportAction");
        w.close("PrivateAction");
      } else if (action->class_name == "SpeedAction" &&
                 !event_of_action.count(action->id)) {
        w.open(tag("PrivateAction", {}, false));
        write_speed_action(w, real_prop(*action, "has_target_speed"));
        w.close("PrivateAction");
      }
    }
    w.close("Private");
  }
  w.close("Actions");
  w.close("Init");

  w.open(tag("Story", {{"name", "story"}}, false));
  w.open(tag("Act", {{"name", "act"}}, false));
  for (const Individual* e : events) {
    const Individual* actor = ref_prop(graph, *e, "hasActor");
    const Individual* trigger = ref_prop(graph, *e, "hasTrigger");
    const Individual* action = ref_prop(graph, *e, "hasEventAction");
    const bool environment = graph.is_subclass_of(e->class_name, "EnvironmentChangeEvent");

    w.open(tag("ManeuverGroup",
               {{"maximumExecutionCount", "1"}, {"name", e->id + "_group"}},
               false));
    w.open(tag("Actors", {{"selectTriggeringEntities", "false"}}, false));
    if (actor) w.line(tag("EntityRef", {{"entityRef", actor->id}}, true));
    w.close("Actors");
    w.open(tag("Maneuver", {{"name", e->id + "_maneuver"}}, false));
    w.open(tag("Event", {{"name", e->id}, {"priority", "overwrite"}}, false));
    w.open(tag("Action", {{"name", e->id + "_action"}}, false));
    if (environment) {
      w.open(tag("GlobalAction", {}, false));
      write_environment(w, graph);
      w.close("GlobalAction");
    } else if (action && action->class_name == "SpeedAction") {
      w.open(tag("PrivateAction", {}, false));
      write_speed_action(w, real_prop(*action, "has_target_speed"));
      w.close("PrivateAction");
    } else {
      w.line(tag("UserDefinedAction", {}, true));
    }
    w.close("Action");
    write_trigger(w, "StartTrigger", e->id + "_condition", trigger,
                  actor ? actor->id : "");
    w.close("Event");
    w.close("Maneuver");
    w.close("ManeuverGroup");
  }
  w.close("Act");
  w.close("Story");
  w.line(tag("StopTrigger", {}, true));
  w.close("Storyboard");
  w.close("OpenSCENARIO");
  return w.out.str();
}

ExtractedScenario parse_back(std::string_view xosc_xml) {
  const auto doc = parse_xml(xosc_xml);
  if (doc->name != "OpenSCENARIO") throw Error("not an OpenSCENARIO document");

  ExtractedScenario out;
  if (const XmlNode* logic = doc->descendant({"RoadNetwork", "LogicFile"})) {
    out.xodr_ref = logic->attr("filepath");
  }

  const XmlNode* entities = doc->child("Entities");
  const XmlNode* storyboard = doc->child("Storyboard");
  if (!entities || !storyboard) throw Error("document lacks Entities or Storyboard");

  for (const XmlNode* object : entities->children_named("ScenarioObject")) {
    ExtractedEntity entity;
    entity.name = object->attr("name");
    entity.category = object->child("Pedestrian") ? "pedestrian" : "vehicle";
    out.entities.push_back(entity);
  }

  const XmlNode* init_actions = storyboard->descendant({"Init", "Actions"});
  if (!init_actions) throw Error("document lacks Init actions");

  for (const XmlNode* priv : init_actions->children_named("Private")) {
    const std::string ref = priv->attr("entityRef");
    ExtractedEntity* entity = nullptr;
    for (ExtractedEntity& e : out.entities) {
      if (e.name == ref) entity = &e;
    }
    if (!entity) throw Error("init action for unknown entity '" + ref + "'");
    for (const XmlNode* action : priv->children_named("PrivateAction")) {
      if (const XmlNode* world =
              action->descendant({"TeleportAction", "Position", "WorldPosition"})) {
        entity->x = parse_double(world->attr("x"));
        entity->y = parse_double(world->attr("y"));
        entity->z = parse_double(world->attr("z"));
        entity->heading = parse_double(world->attr("h"));
      }
      if (const XmlNode* speed = action->descendant(
              {"LongitudinalAction", "SpeedAction", "SpeedActionTarget",
               "AbsoluteTargetSpeed"})) {
        entity->init_speed = parse_double(speed->attr("value"));
      }
    }
  }

  auto read_weather = [&out](const XmlNode* environment) {
    if (!environment) return;
    WeatherState& ws = out.weather;
    if (const XmlNode* weather = environment->child("Weather")) {
      ws.cloud_cover = parse_double(weather->attr_or("cloudCover", "0"));
      ws.wind_speed = parse_double(weather->attr_or("windSpeed", "0"));
      if (const XmlNode* sun = weather->child("Sun")) {
        ws.sun_azimuth = parse_double(sun->attr_or("azimuth", "0"));
        ws.sun_altitude = parse_double(sun->attr_or("elevation", "0"));
      }
      if (const XmlNode* fog = weather->child("Fog")) {
        ws.fog_distance = parse_double(fog->attr_or("visualRange", "100"));
        ws.fog_density = parse_double(fog->attr_or("density", "0"));
        ws.fog_falloff = parse_double(fog->attr_or("falloff", "0"));
      }
      if (const XmlNode* rain = weather->child("Precipitation")) {
        ws.precipitation_intensity = parse_double(rain->attr_or("intensity", "0"));
        ws.precipitation_deposits = parse_double(rain->attr_or("deposits", "0"));
      }
    }
    if (const XmlNode* road = environment->child("RoadCondition")) {
      ws.friction = parse_double(road->attr_or("frictionScaleFactor", "1"));
      ws.wetness = parse_double(road->attr_or("wetness", "0"));
    }
  };

  for (const XmlNode* global : init_actions->children_named("GlobalAction")) {
    read_weather(global->descendant({"EnvironmentAction", "Environment"}));
  }

  if (const XmlNode* story = storyboard->child("Story")) {
    if (const XmlNode* act = story->child("Act")) {
      for (const XmlNode* group : act->children_named("ManeuverGroup")) {
        const XmlNode* event =
            group->descendant({"Maneuver", "Event"});
        if (!event) continue;
        ExtractedEvent ev;
        ev.name = event->attr("name");
        if (const XmlNode* actor_ref = group->descendant({"Actors", "EntityRef"})) {
          ev.actor = actor_ref->attr("entityRef");
        }
        if (const XmlNode* speed = event->descendant(
                {"Action", "PrivateAction", "LongitudinalAction", "SpeedAction",
                 "SpeedActionTarget", "AbsoluteTargetSpeed"})) {
          ev.target_speed = parse_double(speed->attr("value"));
        }
        read_weather(event->descendant(
            {"Action", "GlobalAction", "EnvironmentAction", "Environment"}));
        if (const XmlNode* cond = event->descendant(
                {"StartTrigger", "ConditionGroup", "Condition"})) {
          if (const XmlNode* sim = cond->descendant(
                  {"ByValueCondition", "SimulationTimeCondition"})) {
            ev.trigger_type = "sim_time";
            ev.trigger_value = parse_double(sim->attr("value"));
          } else if (const XmlNode* dist = cond->descendant(
                         {"ByEntityCondition", "EntityCondition",
                          "RelativeDistanceCondition"})) {
            ev.trigger_type = "relative_distance";
            ev.trigger_value = parse_double(dist->attr("value"));
          }
        }
        out.events.push_back(std::move(ev));
      }
    }
  }
  return out;
}

}  // namespace scengen
