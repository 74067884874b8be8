#include "scengen/search_space.hpp"

#include <algorithm>

#include <json.hpp>

#include "scengen/numeric.hpp"

namespace scengen {

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::kStatic: return "static";
    case Axis::kTemporaryChange: return "temporary_change";
    case Axis::kTrafficParticipant: return "traffic_participant";
    case Axis::kWeather: return "weather";
    case Axis::kExtension: return "extension";
  }
  return "extension";
}

Axis axis_from_name(std::string_view name) {
  if (name == "static") return Axis::kStatic;
  if (name == "temporary_change") return Axis::kTemporaryChange;
  if (name == "traffic_participant") return Axis::kTrafficParticipant;
  if (name == "weather") return Axis::kWeather;
  if (name == "extension") return Axis::kExtension;
  throw Error("unknown axis: '" + std::string(name) + "'");
}

SearchSpace SearchSpace::create(std::vector<ParameterSpec> specs) {
  if (specs.empty()) throw Error("search space needs at least one parameter");
  SearchSpace space;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const ParameterSpec& p = specs[i];
    if (p.name.empty()) throw Error("parameter name must be non-empty");
    if (!(p.lower < p.upper)) {
      throw Error("inverted bounds for '" + p.name + "': [" + format_exact(p.lower) +
                  ", " + format_exact(p.upper) + "]");
    }
    if (p.layer < 1 || p.layer > 5) {
      throw Error("parameter '" + p.name + "' has layer outside 1..5");
    }
    if (!space.index_.emplace(p.name, i).second) {
      throw Error("duplicate parameter name: '" + p.name + "'");
    }
    if (p.layer <= 2) {
      space.static_indices_.push_back(i);
    } else {
      space.dynamic_indices_.push_back(i);
    }
  }
  space.specs_ = std::move(specs);
  return space;
}

SearchSpace SearchSpace::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("search space JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error("search space JSON must be an array");
  std::vector<ParameterSpec> specs;
  for (const auto& item : doc) {
    ParameterSpec p;
    p.name = item.at("name").get<std::string>();
    p.axis = axis_from_name(item.at("axis").get<std::string>());
    p.layer = item.at("layer").get<int>();
    p.lower = item.at("lower").get<double>();
    p.upper = item.at("upper").get<double>();
    p.unit = item.value("unit", std::string{});
    specs.push_back(std::move(p));
  }
  return create(std::move(specs));
}

SearchSpace SearchSpace::default_dynamic(bool with_weather) {
  std::vector<ParameterSpec> specs = {
      {"bv_speed", Axis::kTrafficParticipant, 4, 0.5, 15.0, "m/s"},
      {"bv_spawn_delay", Axis::kTemporaryChange, 3, 0.0, 10.0, "s"},
      {"ego_speed", Axis::kTrafficParticipant, 4, 0.5, 15.0, "m/s"},
      {"ego_spawn_offset", Axis::kTrafficParticipant, 4, 0.0, 20.0, "m"},
  };
  if (with_weather) {
    specs.push_back({"fog_density", Axis::kWeather, 5, 0.0, 100.0, "%"});
    specs.push_back({"precipitation_intensity", Axis::kWeather, 5, 0.0, 100.0, "%"});
    specs.push_back({"wetness", Axis::kWeather, 5, 0.0, 100.0, "%"});
    specs.push_back({"sun_altitude", Axis::kWeather, 5, -90.0, 50.0, "deg"});
  }
  return create(std::move(specs));
}

std::optional<std::size_t> SearchSpace::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string SearchSpace::to_json_text() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const ParameterSpec& p : specs_) {
    doc.push_back({{"name", p.name},
                   {"axis", std::string(axis_name(p.axis))},
                   {"layer", p.layer},
                   {"lower", p.lower},
                   {"upper", p.upper},
                   {"unit", p.unit}});
  }
  return doc.dump(2);
}

ScenarioVector encode(const SearchSpace& space, const std::map<std::string, double>& named) {
  if (named.size() != space.dimension()) {
    for (const ParameterSpec& p : space.specs()) {
      if (!named.count(p.name)) throw Error("missing parameter: '" + p.name + "'");
    }
    for (const auto& [name, _] : named) {
      if (!space.has(name)) throw Error("unknown parameter: '" + name + "'");
    }
  }
  ScenarioVector v;
  v.values.reserve(space.dimension());
  for (const ParameterSpec& p : space.specs()) {
    auto it = named.find(p.name);
    if (it == named.end()) throw Error("missing parameter: '" + p.name + "'");
    v.values.push_back(it->second);
  }
  return v;
}

std::map<std::string, double> decode(const SearchSpace& space, const ScenarioVector& v) {
  if (v.values.size() != space.dimension()) {
    throw Error("vector dimension " + std::to_string(v.values.size()) +
                " does not match space dimension " + std::to_string(space.dimension()));
  }
  std::map<std::string, double> named;
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    named.emplace(space.spec(i).name, v.values[i]);
  }
  return named;
}

ScenarioVector clamp_to_bounds(const SearchSpace& space, ScenarioVector v) {
  if (v.values.size() != space.dimension()) {
    throw Error("vector dimension " + std::to_string(v.values.size()) +
                " does not match space dimension " + std::to_string(space.dimension()));
  }
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    v.values[i] = clamp(v.values[i], space.spec(i).lower, space.spec(i).upper);
  }
  return v;
}

bool within_bounds(const SearchSpace& space, const ScenarioVector& v) {
  if (v.values.size() != space.dimension()) return false;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (v.values[i] < space.spec(i).lower || v.values[i] > space.spec(i).upper) return false;
  }
  return true;
}

}  // namespace scengen
