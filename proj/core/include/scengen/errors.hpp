#pragma once

#include <stdexcept>
#include <string>

namespace scengen {

// Base class for all recoverable toolkit errors (bad input, violated
// preconditions, malformed files). Logic bugs use assert instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class XmlError : public Error {
 public:
  explicit XmlError(const std::string& what) : Error(what) {}
};

}  // namespace scengen
