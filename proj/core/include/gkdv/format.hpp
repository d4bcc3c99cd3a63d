#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace gkdv {

/// Shortest decimal text that round-trips to the same double; "nan" for NaN.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace gkdv
