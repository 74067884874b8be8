#include "scengen/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scengen/numeric.hpp"

namespace scengen {

double friction_from_wetness(double wetness, FrictionModel model) {
  if (wetness < 0.0 || wetness > 100.0) {
    throw Error("wetness out of range [0,100]: " + format_exact(wetness));
  }
  if (model == FrictionModel::kMonotone) {
    const double step = wetness < 40.0 ? 1.0 : 0.0;
    return clamp(0.6 * (100.0 - wetness) / 100.0 + 0.4 * step, 0.0, 1.0);
  }
  const double raw = wetness < 40.0 ? (1.0 - wetness) / 200.0 : 0.6;
  return clamp(raw, 0.0, 1.0);
}

FogDerivatives fog_derivatives(double fog_density) {
  if (fog_density < 0.0 || fog_density > 100.0) {
    throw Error("fog density out of range [0,100]: " + format_exact(fog_density));
  }
  return {100.0 - fog_density, 0.05 * fog_density};
}

double azimuth_from_altitude(double altitude, bool normalized) {
  const double arg = (altitude + 20.0) / 70.0;
  if (arg < -1.0 || arg > 1.0) {
    throw Error("altitude outside [-90,50]: " + format_exact(altitude));
  }
  const double scale = normalized ? 2.0 / std::numbers::pi : 1.0;
  return (125.0 / 4.0) * std::asin(arg) * scale;
}

namespace {

struct Extents {
  double junction_half;
  double road_half;   // carriageway half width per approach
  double reach;       // outer end of the approaches
  double shoulder = 3.0;
  double crosswalk = 3.0;
};

Extents extents_of(const StaticMapSpec& map) {
  return {map.junction_half_width, map.lanes_per_approach * map.lane_width,
          map.junction_half_width + map.approach_length};
}

bool in_junction(const Extents& e, Vec2 p) {
  return std::fabs(p.x) <= e.junction_half && std::fabs(p.y) <= e.junction_half;
}

// along/perp decomposition relative to the approach the point is closest to.
struct ApproachFrame {
  double along;  // distance from junction center along the approach axis
  double perp;   // signed lateral offset from the approach centerline
  bool x_axis;
};

ApproachFrame approach_frame(Vec2 p) {
  if (std::fabs(p.x) >= std::fabs(p.y)) return {std::fabs(p.x), p.y, true};
  return {std::fabs(p.y), p.x, false};
}

bool on_road(const Extents& e, Vec2 p) {
  if (in_junction(e, p)) return true;
  const ApproachFrame f = approach_frame(p);
  return f.along >= e.junction_half && f.along <= e.reach && std::fabs(f.perp) <= e.road_half;
}

bool on_roadside(const Extents& e, Vec2 p) {
  const ApproachFrame f = approach_frame(p);
  return f.along >= e.junction_half && f.along <= e.reach &&
         std::fabs(f.perp) > e.road_half && std::fabs(f.perp) <= e.road_half + e.shoulder;
}

bool on_crosswalk(const Extents& e, Vec2 p) {
  const ApproachFrame f = approach_frame(p);
  return f.along >= e.junction_half && f.along <= e.junction_half + e.crosswalk &&
         std::fabs(f.perp) <= e.road_half;
}

Vec2 rebuild_position(Vec2 original, double along, double perp) {
  const ApproachFrame f = approach_frame(original);
  const double sa = (f.x_axis ? original.x : original.y) >= 0.0 ? 1.0 : -1.0;
  if (f.x_axis) return {sa * along, perp};
  return {perp, sa * along};
}

Vec2 project_to_junction(const Extents& e, Vec2 p) {
  return {clamp(p.x, -e.junction_half, e.junction_half),
          clamp(p.y, -e.junction_half, e.junction_half)};
}

Vec2 project_to_road(const Extents& e, Vec2 p) {
  if (on_road(e, p)) return p;
  const ApproachFrame f = approach_frame(p);
  const double along = clamp(f.along, e.junction_half, e.reach);
  const double perp = clamp(f.perp, -e.road_half, e.road_half);
  return rebuild_position(p, along, perp);
}

Vec2 project_to_roadside(const Extents& e, Vec2 p) {
  const ApproachFrame f = approach_frame(p);
  const double along = clamp(f.along, e.junction_half, e.reach);
  const double side = f.perp >= 0.0 ? 1.0 : -1.0;
  const double perp = side * clamp(std::fabs(f.perp), e.road_half + 0.5, e.road_half + e.shoulder);
  return rebuild_position(p, along, perp);
}

Vec2 project_to_crosswalk(const Extents& e, Vec2 p) {
  const ApproachFrame f = approach_frame(p);
  const double along = clamp(f.along, e.junction_half, e.junction_half + e.crosswalk);
  const double perp = clamp(f.perp, -e.road_half, e.road_half);
  return rebuild_position(p, along, perp);
}

bool weather_caps_speed(const ScenarioState& s, const ConstraintConfig& cfg) {
  return s.weather.sun_altitude < cfg.night_sun_altitude ||
         s.weather.precipitation_intensity >= cfg.heavy_precipitation ||
         s.weather.fog_density >= cfg.heavy_fog;
}

std::vector<ConstraintRule> make_rules() {
  std::vector<ConstraintRule> rules;

  rules.push_back({
      "00_field_bounds",
      RuleKind::kIntraLayer,
      "percent fields within [0,100], sun altitude within [-90,50], speeds non-negative",
      [](const ScenarioState& s, const ConstraintConfig&) {
        const WeatherState& w = s.weather;
        auto pct = [](double v) { return v >= 0.0 && v <= 100.0; };
        if (!pct(w.cloud_cover) || !pct(w.precipitation_intensity) ||
            !pct(w.precipitation_deposits) || !pct(w.wind_speed) || !pct(w.fog_density) ||
            !pct(w.wetness)) {
          return false;
        }
        if (w.sun_altitude < -90.0 || w.sun_altitude > 50.0) return false;
        if (w.fog_distance < 0.0 || w.fog_falloff < 0.0) return false;
        if (w.friction < 0.0 || w.friction > 1.0) return false;
        return std::all_of(s.participants.begin(), s.participants.end(),
                           [](const ParticipantState& p) { return p.speed >= 0.0; });
      },
      [](ScenarioState& s, const ConstraintConfig&) {
        WeatherState& w = s.weather;
        w.cloud_cover = clamp(w.cloud_cover, 0.0, 100.0);
        w.precipitation_intensity = clamp(w.precipitation_intensity, 0.0, 100.0);
        w.precipitation_deposits = clamp(w.precipitation_deposits, 0.0, 100.0);
        w.wind_speed = clamp(w.wind_speed, 0.0, 100.0);
        w.fog_density = clamp(w.fog_density, 0.0, 100.0);
        w.wetness = clamp(w.wetness, 0.0, 100.0);
        w.sun_altitude = clamp(w.sun_altitude, -90.0, 50.0);
        w.fog_distance = std::max(w.fog_distance, 0.0);
        w.fog_falloff = std::max(w.fog_falloff, 0.0);
        w.friction = clamp(w.friction, 0.0, 1.0);
        for (ParticipantState& p : s.participants) p.speed = std::max(p.speed, 0.0);
      },
  });

  rules.push_back({
      "01_traffic_light_at_junction",
      RuleKind::kInterLayer,
      "traffic lights may only be initialized at the junction",
      [](const ScenarioState& s, const ConstraintConfig&) {
        const Extents e = extents_of(s.map);
        for (const Placement& p : s.placements) {
          if (p.kind == PlacementKind::kTrafficLight && !in_junction(e, p.position)) {
            return false;
          }
        }
        return true;
      },
      [](ScenarioState& s, const ConstraintConfig&) {
        const Extents e = extents_of(s.map);
        for (Placement& p : s.placements) {
          if (p.kind != PlacementKind::kTrafficLight) continue;
          if (!s.map_has_junction) {
            throw Error("placement '" + p.id + "' needs a junction but the map has none");
          }
          if (!in_junction(e, p.position)) p.position = project_to_junction(e, p.position);
        }
      },
  });

  rules.push_back({
      "02_signage_roadside",
      RuleKind::kInterLayer,
      "signposts belong alongside roads, not on the carriageway or off the network",
      [](const ScenarioState& s, const ConstraintConfig&) {
        const Extents e = extents_of(s.map);
        for (const Placement& p : s.placements) {
          if (p.kind == PlacementKind::kSignage && !on_roadside(e, p.position)) return false;
        }
        return true;
      },
      [](ScenarioState& s, const ConstraintConfig&) {
        const Extents e = extents_of(s.map);
        for (Placement& p : s.placements) {
          if (p.kind == PlacementKind::kSignage && !on_roadside(e, p.position)) {
            p.position = project_to_roadside(e, p.position);
          }
        }
      },
  });

  rules.push_back({
      "03_participants_on_travel_ways",
      RuleKind::kInterLayer,
      "vehicles drive on roads; pedestrians keep to crosswalks",
      [](const ScenarioState& s, const ConstraintConfig&) {
        const Extents e = extents_of(s.map);
        for (const Placement& p : s.placements) {
          if (p.kind == PlacementKind::kVehicle && !on_road(e, p.position)) return false;
          if (p.kind == PlacementKind::kPedestrian && !on_crosswalk(e, p.position)) return false;
        }
        return true;
      },
      [](ScenarioState& s, const ConstraintConfig&) {
        const Extents e = extents_of(s.map);
        for (Placement& p : s.placements) {
          if (p.kind == PlacementKind::kVehicle && !on_road(e, p.position)) {
            p.position = project_to_road(e, p.position);
          } else if (p.kind == PlacementKind::kPedestrian && !on_crosswalk(e, p.position)) {
            p.position = project_to_crosswalk(e, p.position);
          }
        }
      },
  });

  rules.push_back({
      "04_conditions_cap_speed",
      RuleKind::kInterLayer,
      "night, heavy rain, or thick fog limits participant speeds",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        if (!weather_caps_speed(s, cfg)) return true;
        return std::all_of(s.participants.begin(), s.participants.end(),
                           [&](const ParticipantState& p) {
                             return p.speed <= cfg.participant_speed_cap;
                           });
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        if (!weather_caps_speed(s, cfg)) return;
        for (ParticipantState& p : s.participants) {
          p.speed = std::min(p.speed, cfg.participant_speed_cap);
        }
      },
  });

  rules.push_back({
      "05_rain_implies_cloud",
      RuleKind::kIntraLayer,
      "high rainfall requires at least as much cloud cover",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        return s.weather.precipitation_intensity <= cfg.rain_cloud_threshold ||
               s.weather.cloud_cover >= s.weather.precipitation_intensity;
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        if (s.weather.precipitation_intensity > cfg.rain_cloud_threshold) {
          s.weather.cloud_cover =
              std::max(s.weather.cloud_cover, s.weather.precipitation_intensity);
        }
      },
  });

  rules.push_back({
      "06_wind_limits_fog",
      RuleKind::kIntraLayer,
      "high wind speed keeps fog density low",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        return s.weather.wind_speed <= cfg.wind_high_threshold ||
               s.weather.fog_density <= cfg.fog_cap_under_wind;
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        if (s.weather.wind_speed > cfg.wind_high_threshold) {
          s.weather.fog_density = std::min(s.weather.fog_density, cfg.fog_cap_under_wind);
        }
      },
  });

  rules.push_back({
      "07_dim_sky_limits_sun",
      RuleKind::kIntraLayer,
      "thick fog or cloud cover constrains illumination",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        return std::max(s.weather.fog_density, s.weather.cloud_cover) <= cfg.dim_sky_threshold ||
               s.weather.sun_altitude <= cfg.dim_sun_altitude_max;
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        if (std::max(s.weather.fog_density, s.weather.cloud_cover) > cfg.dim_sky_threshold) {
          s.weather.sun_altitude = std::min(s.weather.sun_altitude, cfg.dim_sun_altitude_max);
        }
      },
  });

  rules.push_back({
      "08_deposits_track_intensity",
      RuleKind::kInterElement,
      "precipitation deposits rise with precipitation intensity",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        return s.weather.precipitation_deposits >=
               s.weather.precipitation_intensity - cfg.deposits_lag;
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        s.weather.precipitation_deposits =
            clamp(std::max(s.weather.precipitation_deposits,
                           s.weather.precipitation_intensity - cfg.deposits_lag),
                  0.0, 100.0);
      },
  });

  rules.push_back({
      "09_wetness_tracks_deposits",
      RuleKind::kInterElement,
      "road wetness follows precipitation deposits",
      [](const ScenarioState& s, const ConstraintConfig&) {
        return s.weather.wetness >= s.weather.precipitation_deposits;
      },
      [](ScenarioState& s, const ConstraintConfig&) {
        s.weather.wetness = std::max(s.weather.wetness, s.weather.precipitation_deposits);
      },
  });

  rules.push_back({
      "10_friction_from_wetness",
      RuleKind::kInterElement,
      "road friction is determined by wetness",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        return nearly_equal(s.weather.friction,
                            friction_from_wetness(s.weather.wetness, cfg.friction_model));
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        s.weather.friction = friction_from_wetness(s.weather.wetness, cfg.friction_model);
      },
  });

  rules.push_back({
      "11_fog_couples_distance_falloff",
      RuleKind::kInterElement,
      "fog distance and falloff are determined by fog density",
      [](const ScenarioState& s, const ConstraintConfig&) {
        const FogDerivatives f = fog_derivatives(s.weather.fog_density);
        return nearly_equal(s.weather.fog_distance, f.fog_distance) &&
               nearly_equal(s.weather.fog_falloff, f.fog_falloff);
      },
      [](ScenarioState& s, const ConstraintConfig&) {
        const FogDerivatives f = fog_derivatives(s.weather.fog_density);
        s.weather.fog_distance = f.fog_distance;
        s.weather.fog_falloff = f.fog_falloff;
      },
  });

  rules.push_back({
      "12_azimuth_from_altitude",
      RuleKind::kInterElement,
      "sun azimuth is coupled to sun altitude",
      [](const ScenarioState& s, const ConstraintConfig& cfg) {
        return nearly_equal(s.weather.sun_azimuth,
                            azimuth_from_altitude(s.weather.sun_altitude, cfg.normalized_arcsin));
      },
      [](ScenarioState& s, const ConstraintConfig& cfg) {
        s.weather.sun_azimuth =
            azimuth_from_altitude(s.weather.sun_altitude, cfg.normalized_arcsin);
      },
  });

  return rules;
}

}  // namespace

const std::vector<ConstraintRule>& builtin_rules() {
  static const std::vector<ConstraintRule> rules = make_rules();
  return rules;
}

std::vector<Violation> validate(const ScenarioState& state, const ConstraintConfig& cfg) {
  std::vector<Violation> out;
  for (const ConstraintRule& rule : builtin_rules()) {
    bool ok;
    try {
      ok = rule.predicate(state, cfg);
    } catch (const Error&) {
      ok = false;  // out-of-domain values count as violations, not crashes
    }
    if (ok) continue;
    Violation v;
    v.rule_id = rule.id;
    v.message = rule.description;
    const WeatherState& w = state.weather;
    v.offending_values = {
        {"cloud_cover", w.cloud_cover},
        {"precipitation_intensity", w.precipitation_intensity},
        {"precipitation_deposits", w.precipitation_deposits},
        {"wind_speed", w.wind_speed},
        {"fog_density", w.fog_density},
        {"fog_distance", w.fog_distance},
        {"fog_falloff", w.fog_falloff},
        {"wetness", w.wetness},
        {"friction", w.friction},
        {"sun_altitude", w.sun_altitude},
        {"sun_azimuth", w.sun_azimuth},
    };
    out.push_back(std::move(v));
  }
  return out;
}

ScenarioState repair(ScenarioState state, const ConstraintConfig& cfg) {
  for (const ConstraintRule& rule : builtin_rules()) {
    rule.repair(state, cfg);
  }
  return state;
}

}  // namespace scengen
