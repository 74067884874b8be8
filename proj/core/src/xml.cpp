#include "scengen/xml.hpp"

#include <cctype>

namespace scengen {

const XmlNode* XmlNode::child(std::string_view child_name) const {
  for (const auto& c : children) {
    if (c->name == child_name) return c.get();
  }
  return nullptr;
}

std::vector<const XmlNode*> XmlNode::children_named(std::string_view child_name) const {
  std::vector<const XmlNode*> out;
  for (const auto& c : children) {
    if (c->name == child_name) out.push_back(c.get());
  }
  return out;
}

const XmlNode* XmlNode::descendant(std::initializer_list<std::string_view> path) const {
  const XmlNode* node = this;
  for (std::string_view step : path) {
    if (!node) return nullptr;
    node = node->child(step);
  }
  return node;
}

const std::string& XmlNode::attr(const std::string& key) const {
  auto it = attributes.find(key);
  if (it == attributes.end()) {
    throw XmlError("element <" + name + "> lacks attribute '" + key + "'");
  }
  return it->second;
}

std::string XmlNode::attr_or(const std::string& key, std::string fallback) const {
  auto it = attributes.find(key);
  return it == attributes.end() ? fallback : it->second;
}

std::string xml_escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<XmlNode> parse_document() {
    skip_prolog();
    auto root = parse_element();
    skip_misc();
    if (pos_ != text_.size()) throw XmlError("content after document root");
    return root;
  }

 private:
  void skip_whitespace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_comment() {
    if (!text_.substr(pos_).starts_with("<!--")) return;
    const auto end = text_.find("-->", pos_ + 4);
    if (end == std::string_view::npos) throw XmlError("unterminated comment");
    pos_ = end + 3;
  }

  void skip_prolog() {
    skip_whitespace();
    if (text_.substr(pos_).starts_with("<?")) {
      const auto end = text_.find("?>", pos_);
      if (end == std::string_view::npos) throw XmlError("unterminated XML declaration");
      pos_ = end + 2;
    }
    skip_misc();
  }

  void skip_misc() {
    while (true) {
      skip_whitespace();
      if (text_.substr(pos_).starts_with("<!--")) {
        skip_comment();
      } else {
        return;
      }
    }
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' ||
          c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) throw XmlError("expected a name at offset " + std::to_string(pos_));
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string unescape(std::string_view raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      const auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) throw XmlError("unterminated entity");
      const std::string_view entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "amp") out += '&';
      else if (entity == "lt") out += '<';
      else if (entity == "gt") out += '>';
      else if (entity == "quot") out += '"';
      else if (entity == "apos") out += '\'';
      else throw XmlError("unknown entity: &" + std::string(entity) + ";");
      i = semi;
    }
    return out;
  }

  std::unique_ptr<XmlNode> parse_element() {
    if (pos_ >= text_.size() || text_[pos_] != '<') {
      throw XmlError("expected '<' at offset " + std::to_string(pos_));
    }
    ++pos_;
    auto node = std::make_unique<XmlNode>();
    node->name = parse_name();

    while (true) {
      skip_whitespace();
      if (pos_ >= text_.size()) throw XmlError("unterminated tag <" + node->name + ">");
      if (text_[pos_] == '/') {
        if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>') {
          throw XmlError("malformed self-closing tag");
        }
        pos_ += 2;
        return node;
      }
      if (text_[pos_] == '>') {
        ++pos_;
        break;
      }
      const std::string key = parse_name();
      skip_whitespace();
      if (pos_ >= text_.size() || text_[pos_] != '=') {
        throw XmlError("attribute '" + key + "' lacks '='");
      }
      ++pos_;
      skip_whitespace();
      if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\'')) {
        throw XmlError("attribute value must be quoted");
      }
      const char q = text_[pos_++];
      const auto end = text_.find(q, pos_);
      if (end == std::string_view::npos) throw XmlError("unterminated attribute value");
      if (!node->attributes.emplace(key, unescape(text_.substr(pos_, end - pos_))).second) {
        throw XmlError("duplicate attribute '" + key + "'");
      }
      pos_ = end + 1;
    }

    // Content: children, text, comments, then the matching close tag.
    while (true) {
      if (pos_ >= text_.size()) throw XmlError("unterminated element <" + node->name + ">");
      if (text_[pos_] == '<') {
        if (text_.substr(pos_).starts_with("<!--")) {
          skip_comment();
          continue;
        }
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
          pos_ += 2;
          const std::string closing = parse_name();
          if (closing != node->name) {
            throw XmlError("mismatched close tag </" + closing + "> for <" + node->name + ">");
          }
          skip_whitespace();
          if (pos_ >= text_.size() || text_[pos_] != '>') throw XmlError("malformed close tag");
          ++pos_;
          return node;
        }
        node->children.push_back(parse_element());
      } else {
        const auto next = text_.find('<', pos_);
        if (next == std::string_view::npos) {
          throw XmlError("unterminated element <" + node->name + ">");
        }
        node->text += unescape(text_.substr(pos_, next - pos_));
        pos_ = next;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<XmlNode> parse_xml(std::string_view text) {
  return Parser(text).parse_document();
}

}  // namespace scengen
