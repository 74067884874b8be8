#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scengen/ontology.hpp"

namespace scengen {

// One subject-predicate-object assertion. The object token is either a bare
// identifier or a quoted literal.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;
};

// Full triple view of a graph: class and property declarations (reserved
// predicates subClassOf / domain / range, reserved objects Class /
// ObjectProperty / DataProperty), `a` memberships, and property assertions
// with quoted literals. Sorted lexicographically by line.
std::vector<Triple> graph_triples(const ScenarioGraph& graph);

// Plain-text serialization: one triple per line, deterministic order,
// re-importable. export_triples refuses non-conformant graphs;
// import(export(g)) == g.
std::string export_triples(const ScenarioGraph& graph);
ScenarioGraph import_triples(std::string_view text);

// Serialization without the conformance gate (equality checks, debugging).
std::string serialize_triples_unchecked(const ScenarioGraph& graph);

}  // namespace scengen
