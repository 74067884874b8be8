#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scengen/errors.hpp"

namespace scengen {

// Minimal non-validating XML: elements, attributes, text, comments, and the
// XML declaration. No namespaces, DTDs, or CDATA. Enough for the OpenX
// subset this toolkit emits and reads back.
struct XmlNode {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<std::unique_ptr<XmlNode>> children;
  std::string text;

  const XmlNode* child(std::string_view child_name) const;
  std::vector<const XmlNode*> children_named(std::string_view child_name) const;
  const XmlNode* descendant(std::initializer_list<std::string_view> path) const;
  const std::string& attr(const std::string& key) const;  // throws when absent
  std::string attr_or(const std::string& key, std::string fallback) const;
  bool has_attr(const std::string& key) const { return attributes.count(key) > 0; }
};

// Parses a full document; throws XmlError on malformed input (unbalanced
// tags, truncation, bad attribute syntax).
std::unique_ptr<XmlNode> parse_xml(std::string_view text);

std::string xml_escape(std::string_view raw);

}  // namespace scengen
