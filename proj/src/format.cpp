#include "pulsestream/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace pulsestream {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, x);
  return buf;
}

double round_to_output(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

}  // namespace pulsestream
