#pragma once

#include <string>

namespace pulsestream {

inline constexpr int kOutputDigits = 12;

// "%.12g"
std::string format_number(double x);

// x rounded to 12 significant digits, so JSON emits at most that many.
double round_to_output(double x);

}  // namespace pulsestream
