#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scengen/catalog.hpp"
#include "scengen/constraints.hpp"
#include "scengen/crossroad.hpp"
#include "scengen/search_space.hpp"

namespace scengen {

struct ClassDef {
  std::string name;
  std::optional<std::string> parent;
};

enum class PropertyKind { kObjectProperty, kDataProperty };

// Data property ranges use primitive tags: "real", "text", "boolean".
struct PropertyDef {
  std::string name;
  PropertyKind kind = PropertyKind::kDataProperty;
  std::string domain;
  std::string range;
};

struct ObjectRef {
  std::string id;
  bool operator==(const ObjectRef&) const = default;
};

using PropertyValue = std::variant<ObjectRef, double, std::string, bool>;

struct Individual {
  std::string id;
  std::string class_name;
  std::multimap<std::string, PropertyValue> properties;
};

// Class hierarchy, property definitions, and individuals of one concrete
// scenario. Built single-threaded, then treated as immutable.
class ScenarioGraph {
 public:
  void declare_class(std::string name, std::optional<std::string> parent = std::nullopt);
  void declare_property(PropertyDef def);
  Individual& add_individual(std::string id, std::string class_name);
  void set_value(const std::string& individual, const std::string& property,
                 PropertyValue value);

  bool has_class(std::string_view name) const;
  bool is_subclass_of(std::string_view cls, std::string_view ancestor) const;
  const std::map<std::string, ClassDef>& classes() const { return classes_; }
  const std::map<std::string, PropertyDef>& properties() const { return properties_; }
  const std::map<std::string, Individual>& individuals() const { return individuals_; }
  const Individual* find_individual(std::string_view id) const;

  // Individuals whose class derives from `ancestor`, in id order.
  std::vector<const Individual*> individuals_of(std::string_view ancestor) const;

  bool operator==(const ScenarioGraph& other) const;

 private:
  std::map<std::string, ClassDef> classes_;
  std::map<std::string, PropertyDef> properties_;
  std::map<std::string, Individual> individuals_;
};

// The built-in five-layer scenario template: static area/point entities
// (layers 1-2), events (layer 3), traffic participants and actions (layer 4),
// and the weather hierarchy (layer 5).
ScenarioGraph build_template();

// Adds user classes and properties to a template from a JSON document:
//   {"classes": [{"name": ..., "parent": ...}],
//    "properties": [{"name": ..., "kind": "object"|"data",
//                    "domain": ..., "range": ...}]}
void extend_template(ScenarioGraph& graph, std::string_view json_text);

// Background-vehicle start condition. kSimTime fires bv_spawn_delay seconds
// into the episode; kRelativeDistance fires when the ego comes within
// `relative_distance` meters of the background vehicle.
struct TriggerSpec {
  enum class Kind { kSimTime, kRelativeDistance } kind = Kind::kSimTime;
  double relative_distance = 20.0;
};

// Concretizes the template for one logical scenario and search vector: ego
// and background vehicle with teleport/speed actions, the repaired weather
// state as an environment-change event, and spawn/environment triggers.
ScenarioGraph instantiate(const ScenarioGraph& tmpl, const LogicalScenario& logical,
                          const SearchSpace& space, const ScenarioVector& v,
                          const CrossroadMap& map, const ConstraintConfig& cfg = {},
                          const TriggerSpec& trigger = {});

// Domain/range and referential-integrity check; empty means conformant.
std::vector<Violation> check_conformance(const ScenarioGraph& graph);

// Extracts the weather and participant speeds for the constraint engine.
ScenarioState scenario_state_from_graph(const ScenarioGraph& graph,
                                        const StaticMapSpec& map = {});

}  // namespace scengen
