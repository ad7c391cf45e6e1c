#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace asymlink {

/// Shortest text that round-trips the double exactly; used by every CSV writer
/// so outputs are byte-stable.
inline std::string format_real(double x) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace asymlink
