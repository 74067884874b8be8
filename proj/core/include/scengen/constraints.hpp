#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scengen/geometry.hpp"
#include "scengen/map_spec.hpp"

namespace scengen {

// Weather environment of a scenario. Percent fields are in [0,100]; friction
// in [0,1]; angles in degrees. fog_distance/fog_falloff/friction/sun_azimuth
// are derived fields, overwritten from their drivers by repair().
struct WeatherState {
  double cloud_cover = 0.0;
  double precipitation_intensity = 0.0;
  double precipitation_deposits = 0.0;
  double wind_speed = 0.0;
  double fog_density = 0.0;
  double fog_distance = 100.0;  // m
  double fog_falloff = 0.0;
  double wetness = 0.0;
  double friction = 0.005;
  double sun_altitude = 50.0;  // deg
  double sun_azimuth = 0.0;    // deg
};

enum class FrictionModel {
  kPiecewise,  // (1-wetness)/200 below 40, 0.6 from 40 up, clamped to [0,1]
  kMonotone,   // 0.6*(100-wetness)/100 + 0.4*[wetness < 40]
};

// Numeric thresholds for the qualitative coupling rules, overridable from the
// "constraints" section of the run config.
struct ConstraintConfig {
  double rain_cloud_threshold = 50.0;  // precipitation above this forces cloud >= precipitation
  double wind_high_threshold = 60.0;   // wind above this caps fog density
  double fog_cap_under_wind = 30.0;
  double dim_sky_threshold = 70.0;  // max(fog, cloud) above this caps sun altitude
  double dim_sun_altitude_max = 30.0;
  double deposits_lag = 10.0;  // deposits >= precipitation - lag
  double heavy_precipitation = 70.0;
  double heavy_fog = 70.0;
  double night_sun_altitude = 0.0;
  double participant_speed_cap = 8.33;  // m/s under night / heavy rain / heavy fog
  FrictionModel friction_model = FrictionModel::kPiecewise;
  bool normalized_arcsin = false;  // sun azimuth range +-31.25 deg instead of radian arcsin
};

// Road friction from road wetness percent. The literal piecewise model is
// discontinuous at 40 and clamped to [0,1]; the monotone variant is a
// decreasing alternative selectable via config.
double friction_from_wetness(double wetness,
                             FrictionModel model = FrictionModel::kPiecewise);

// (fog_distance, fog_falloff) from fog density percent:
// distance = 100 - density, falloff = 0.05 * density.
struct FogDerivatives {
  double fog_distance;
  double fog_falloff;
};
FogDerivatives fog_derivatives(double fog_density);

// Sun azimuth coupled to altitude: (125/4) * asin((altitude+20)/70), asin in
// radians. With normalized=true the asin is scaled by 2/pi so the output
// range is exactly [-31.25, 31.25] degrees.
double azimuth_from_altitude(double altitude, bool normalized = false);

enum class RuleKind { kInterLayer, kIntraLayer, kInterElement };

enum class PlacementKind { kTrafficLight, kSignage, kPedestrian, kVehicle };

struct Placement {
  std::string id;
  PlacementKind kind = PlacementKind::kVehicle;
  Vec2 position;
};

struct ParticipantState {
  std::string id;
  double speed = 0.0;  // m/s
};

// Everything the constraint rules can see: the weather state, layer-1/2
// placements, participant speeds, and the map the placements live on.
struct ScenarioState {
  WeatherState weather;
  std::vector<Placement> placements;
  std::vector<ParticipantState> participants;
  StaticMapSpec map;
  bool map_has_junction = true;
};

struct Violation {
  std::string rule_id;
  std::string message;
  std::map<std::string, double> offending_values;
};

struct ConstraintRule {
  std::string id;
  RuleKind kind = RuleKind::kIntraLayer;
  std::string description;
  std::function<bool(const ScenarioState&, const ConstraintConfig&)> predicate;
  std::function<void(ScenarioState&, const ConstraintConfig&)> repair;
};

// The built-in rule set, in repair application order: bounds and placements
// first, then intra-layer weather thresholds, then derived inter-element
// fields last so derived values are recomputed after their drivers settle.
const std::vector<ConstraintRule>& builtin_rules();

// Violations in rule order; empty iff every predicate holds.
std::vector<Violation> validate(const ScenarioState& state,
                                const ConstraintConfig& cfg = {});

// One ordered repair pass. Postconditions: validate(repair(s)) is empty and
// repair(repair(s)) == repair(s). Throws when a placement cannot be satisfied
// (a traffic light on a map without a junction).
ScenarioState repair(ScenarioState state, const ConstraintConfig& cfg = {});

}  // namespace scengen
