#pragma once

#include <charconv>
#include <string>
#include <system_error>

// Locale-independent number formatting used by every text output path, so
// that identical inputs always serialize to identical bytes.

namespace symkdv {

// Shortest decimal string that round-trips to the same double ("1", "0.5",
// "0.7071067811865476").
inline std::string fmt_shortest(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// General format with the given number of significant digits.
inline std::string fmt_general(double v, int significant) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

// Scientific format with the given number of significant digits.
inline std::string fmt_scientific(double v, int significant) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, significant - 1);
  return std::string(buf, res.ptr);
}

}  // namespace symkdv
