#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scengen/errors.hpp"

namespace scengen {

// The five search axes of the layered operational design domain. Layers 1-2
// are static (road network, traffic facilities); layers 3-5 are dynamic
// (temporary changes, traffic participants, weather). The extension axis is
// an interface for additional elements and ships empty by default.
enum class Axis {
  kStatic,
  kTemporaryChange,
  kTrafficParticipant,
  kWeather,
  kExtension,
};

std::string_view axis_name(Axis axis);
Axis axis_from_name(std::string_view name);

struct ParameterSpec {
  std::string name;
  Axis axis = Axis::kExtension;
  int layer = 5;  // 1..5
  double lower = 0.0;
  double upper = 1.0;
  std::string unit;  // SI units internally
};

// A real-valued point in a search space, laid out in the space's spec order.
struct ScenarioVector {
  std::vector<double> values;
};

// Ordered, immutable collection of parameter specs. The order defines the
// vector layout and never changes after construction.
class SearchSpace {
 public:
  static SearchSpace create(std::vector<ParameterSpec> specs);

  // Parses a JSON array of {name, axis, layer, lower, upper, unit}.
  static SearchSpace from_json_text(std::string_view text);

  // Dynamic parameters perturbed in the crossroad experiment. Weather
  // parameters are optional extras on the weather axis.
  static SearchSpace default_dynamic(bool with_weather = false);

  const std::vector<ParameterSpec>& specs() const { return specs_; }
  std::size_t dimension() const { return specs_.size(); }
  const ParameterSpec& spec(std::size_t i) const { return specs_[i]; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name).has_value(); }

  // Index partition: layers 1-2 vs layers 3-5.
  const std::vector<std::size_t>& static_indices() const { return static_indices_; }
  const std::vector<std::size_t>& dynamic_indices() const { return dynamic_indices_; }

  std::string to_json_text() const;

 private:
  SearchSpace() = default;

  std::vector<ParameterSpec> specs_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::size_t> static_indices_;
  std::vector<std::size_t> dynamic_indices_;
};

// Named-value map <-> flat vector. encode requires the map to cover exactly
// the space's parameter names; decode(encode(x)) == x.
ScenarioVector encode(const SearchSpace& space, const std::map<std::string, double>& named);
std::map<std::string, double> decode(const SearchSpace& space, const ScenarioVector& v);

// Componentwise projection onto [lower, upper]; idempotent.
ScenarioVector clamp_to_bounds(const SearchSpace& space, ScenarioVector v);

bool within_bounds(const SearchSpace& space, const ScenarioVector& v);

}  // namespace scengen
