#pragma once

#include <string>

namespace effortprep {

inline constexpr int kMaxDecimals = 12;

// Rounds half away from zero at the given number of decimals (presentation
// rounding; stored values always keep full precision).
double round_half_away(double value, int decimals);

// Fixed-point rendering of round_half_away(value, decimals).
// format_fixed(44.689141, 4) == "44.6891". Never emits "-0.0000".
std::string format_fixed(double value, int decimals);

// Shortest decimal form that parses back to the same double ("16.2", not
// "16.199999999999999"). Used for full-precision CSV output and tokens.
std::string format_shortest(double value);

} // namespace effortprep
