#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scengen/constraints.hpp"
#include "scengen/map_spec.hpp"
#include "scengen/ontology.hpp"

namespace scengen {

struct EmitterOptions {
  std::string xodr_filename = "crossroad.xodr";
  std::string author = "scengen";
  // ISO-8601 header date. When absent the current UTC time is used, which
  // makes output time-dependent; set it for byte-reproducible files.
  std::optional<std::string> fixed_timestamp;

  void validate() const {
    if (xodr_filename.empty()) throw Error("xodr filename must be non-empty");
  }
};

// OpenDRIVE 1.6 document for the parametric crossroad: four approach roads,
// one junction, and a connecting road for every legal movement (left,
// straight, right per approach). Junction center at the origin, east approach
// is road 1, numbering counterclockwise. Numeric attributes carry 6
// significant digits.
std::string emit_xodr(const StaticMapSpec& map, const EmitterOptions& opts = {});

// OpenSCENARIO 1.0-vocabulary document from a conformant scenario graph:
// entities for traffic participants, init teleport/speed actions, the
// environment (sun, fog, precipitation, road condition), and one story event
// per Event individual with its trigger. Angles are emitted in degrees and
// percent quantities as raw percents; fog falloff, fog density, precipitation
// deposits, road wetness, cloud cover, and wind speed ride on vendor
// attributes the base schema lacks.
std::string emit_xosc(const ScenarioGraph& graph, const EmitterOptions& opts = {});

struct ExtractedEntity {
  std::string name;
  std::string category;
  double x = 0.0, y = 0.0, z = 0.0, heading = 0.0;
  std::optional<double> init_speed;
};

struct ExtractedEvent {
  std::string name;
  std::string actor;
  std::string trigger_type;  // sim_time | relative_distance
  double trigger_value = 0.0;
  std::optional<double> target_speed;
};

struct ExtractedScenario {
  std::string xodr_ref;
  std::vector<ExtractedEntity> entities;
  WeatherState weather;
  std::vector<ExtractedEvent> events;
};

// Reads back a document produced by emit_xosc. Throws XmlError on malformed
// XML and Error on documents of a different shape.
ExtractedScenario parse_back(std::string_view xosc_xml);

}  // namespace scengen
