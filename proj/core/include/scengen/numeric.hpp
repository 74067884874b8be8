#pragma once

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "scengen/errors.hpp"

namespace scengen {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest representation that parses back to exactly the same double.
// Locale independent, '.' decimal point.
inline std::string format_exact(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Fixed significant-digit representation for emitted file attributes.
inline std::string format_sig(double v, int digits = 6) {
  char buf[48];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
  return std::string(buf, ptr);
}

inline double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    if (text == "inf") return kInf;
    if (text == "-inf") return -kInf;
    throw Error("not a number: '" + std::string(text) + "'");
  }
  return v;
}

inline double clamp(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

inline bool nearly_equal(double a, double b, double tol = 1e-9) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= tol;
}

}  // namespace scengen
