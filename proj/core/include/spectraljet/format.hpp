#pragma once

#include <cstdio>
#include <string>

namespace spectraljet {

// 17 significant digits, round-trip exact.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace spectraljet
