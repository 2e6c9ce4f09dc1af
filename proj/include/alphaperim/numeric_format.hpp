// Shortest decimal representation that round-trips through strtod. Keeps CSV
// output both exact and readable.
#ifndef ALPHAPERIM_NUMERIC_FORMAT_HPP
#define ALPHAPERIM_NUMERIC_FORMAT_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

namespace alphaperim {

inline std::string format_double(double value) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

/// RFC-4180 field quoting: wraps the value in double quotes when it contains
/// a comma, quote or newline (the domain spec column does).
inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace alphaperim

#endif  // ALPHAPERIM_NUMERIC_FORMAT_HPP
