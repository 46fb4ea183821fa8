// SPDX-License-Identifier: Apache-2.0
#ifndef RENYI_FORMAT_HPP
#define RENYI_FORMAT_HPP

#include <cstdio>
#include <string>

namespace renyi {

// Fixed float formatting (12 significant digits) for golden-file stability.
inline std::string format_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace renyi

#endif  // RENYI_FORMAT_HPP
