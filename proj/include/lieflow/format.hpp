#pragma once

#include <cstdio>
#include <string>

namespace lieflow {

/// All numeric output is written with 17 significant digits so runs are
/// byte-reproducible and values round-trip exactly.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace lieflow
