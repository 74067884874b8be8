#include "scengen/triples.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <vector>

#include "scengen/errors.hpp"
#include "scengen/numeric.hpp"

namespace scengen {

namespace {

std::string quote(std::string_view raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string unquote(std::string_view quoted) {
  if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"') {
    throw Error("malformed literal: " + std::string(quoted));
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < quoted.size(); ++i) {
    if (quoted[i] == '\\' && i + 2 < quoted.size()) {
      ++i;
      switch (quoted[i]) {
        case 'n': out += '\n'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: throw Error("bad escape in literal");
      }
    } else {
      out += quoted[i];
    }
  }
  return out;
}

std::string literal_text(const PropertyValue& value) {
  if (std::holds_alternative<double>(value)) return format_exact(std::get<double>(value));
  if (std::holds_alternative<bool>(value)) return std::get<bool>(value) ? "true" : "false";
  return std::get<std::string>(value);
}

// Splits a triple line into exactly three tokens; the object token may be a
// quoted literal containing spaces.
std::array<std::string, 3> split_line(const std::string& line) {
  const std::size_t sp1 = line.find(' ');
  if (sp1 == std::string::npos) throw Error("malformed triple line: " + line);
  const std::size_t sp2 = line.find(' ', sp1 + 1);
  if (sp2 == std::string::npos) throw Error("malformed triple line: " + line);
  return {line.substr(0, sp1), line.substr(sp1 + 1, sp2 - sp1 - 1), line.substr(sp2 + 1)};
}

}  // namespace

std::vector<Triple> graph_triples(const ScenarioGraph& graph) {
  std::vector<Triple> triples;

  for (const auto& [name, def] : graph.classes()) {
    triples.push_back({name, "a", "Class"});
    if (def.parent) triples.push_back({name, "subClassOf", *def.parent});
  }
  for (const auto& [name, def] : graph.properties()) {
    triples.push_back(
        {name, "a",
         def.kind == PropertyKind::kObjectProperty ? "ObjectProperty" : "DataProperty"});
    triples.push_back({name, "domain", def.domain});
    triples.push_back({name, "range", def.range});
  }
  for (const auto& [id, ind] : graph.individuals()) {
    triples.push_back({id, "a", ind.class_name});
    for (const auto& [prop, value] : ind.properties) {
      if (std::holds_alternative<ObjectRef>(value)) {
        triples.push_back({id, prop, std::get<ObjectRef>(value).id});
      } else {
        triples.push_back({id, prop, quote(literal_text(value))});
      }
    }
  }

  std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
    return std::tie(a.subject, a.predicate, a.object) <
           std::tie(b.subject, b.predicate, b.object);
  });
  return triples;
}

std::string serialize_triples_unchecked(const ScenarioGraph& graph) {
  std::string out;
  for (const Triple& t : graph_triples(graph)) {
    out += t.subject;
    out += ' ';
    out += t.predicate;
    out += ' ';
    out += t.object;
    out += '\n';
  }
  return out;
}

std::string export_triples(const ScenarioGraph& graph) {
  const auto violations = check_conformance(graph);
  if (!violations.empty()) {
    throw Error("refusing to export non-conformant graph: " + violations.front().message);
  }
  return serialize_triples_unchecked(graph);
}

ScenarioGraph import_triples(std::string_view text) {
  struct RawTriple {
    std::string s, p, o;
  };
  std::vector<RawTriple> triples;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    auto [s, p, o] = split_line(line);
    triples.push_back({std::move(s), std::move(p), std::move(o)});
  }

  ScenarioGraph g;

  // Declarations first: classes, then parents, then properties.
  std::vector<std::pair<std::string, std::string>> pending_parents;
  std::map<std::string, PropertyDef> pending_props;
  for (const RawTriple& t : triples) {
    if (t.p == "a" && t.o == "Class") {
      g.declare_class(t.s);
    } else if (t.p == "subClassOf") {
      pending_parents.emplace_back(t.s, t.o);
    } else if (t.p == "a" && (t.o == "ObjectProperty" || t.o == "DataProperty")) {
      pending_props[t.s].name = t.s;
      pending_props[t.s].kind = t.o == "ObjectProperty" ? PropertyKind::kObjectProperty
                                                        : PropertyKind::kDataProperty;
    } else if (t.p == "domain") {
      pending_props[t.s].name = t.s;
      pending_props[t.s].domain = t.o;
    } else if (t.p == "range") {
      pending_props[t.s].name = t.s;
      pending_props[t.s].range = t.o;
    }
  }

  // Parent links may reference classes declared later in the file, so the
  // graph is rebuilt with parents resolved.
  {
    ScenarioGraph resolved;
    std::map<std::string, std::optional<std::string>> parents;
    for (const auto& [child, parent] : pending_parents) parents[child] = parent;
    // Topological insert: repeatedly add classes whose parent exists.
    std::vector<std::string> remaining;
    for (const auto& [name, _] : g.classes()) remaining.push_back(name);
    std::size_t guard = remaining.size() * remaining.size() + 1;
    while (!remaining.empty() && guard-- > 0) {
      for (auto it = remaining.begin(); it != remaining.end();) {
        const auto parent = parents.count(*it) ? parents[*it] : std::nullopt;
        if (!parent || resolved.has_class(*parent)) {
          resolved.declare_class(*it, parent);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    if (!remaining.empty()) throw Error("cyclic or dangling subClassOf declarations");
    g = std::move(resolved);
  }

  for (auto& [name, def] : pending_props) {
    if (def.domain.empty() || def.range.empty()) {
      throw Error("property '" + name + "' lacks domain or range");
    }
    g.declare_property(def);
  }

  // Memberships, then property assertions.
  for (const RawTriple& t : triples) {
    if (t.p == "a" && t.o != "Class" && t.o != "ObjectProperty" && t.o != "DataProperty") {
      g.add_individual(t.s, t.o);
    }
  }
  for (const RawTriple& t : triples) {
    if (t.p == "a" || t.p == "subClassOf" || t.p == "domain" || t.p == "range") continue;
    auto pit = g.properties().find(t.p);
    if (pit == g.properties().end()) throw Error("assertion with undeclared property: " + t.p);
    const PropertyDef& def = pit->second;
    if (def.kind == PropertyKind::kObjectProperty) {
      g.set_value(t.s, t.p, ObjectRef{t.o});
    } else {
      const std::string raw = unquote(t.o);
      if (def.range == "real") {
        g.set_value(t.s, t.p, parse_double(raw));
      } else if (def.range == "boolean") {
        g.set_value(t.s, t.p, raw == "true");
      } else {
        g.set_value(t.s, t.p, raw);
      }
    }
  }
  return g;
}

}  // namespace scengen
