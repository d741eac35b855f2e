#include "format.hpp"

#include "error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace effortprep {

namespace {

void check_decimals(int decimals) {
    if (decimals < 0 || decimals > kMaxDecimals) {
        fail(ErrorKind::InvalidArgument,
             "decimals must be in 0.." + std::to_string(kMaxDecimals) +
                 " (got " + std::to_string(decimals) + ")");
    }
}

long long pow10_ll(int decimals) {
    long long scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    return scale;
}

} // namespace

double round_half_away(double value, int decimals) {
    check_decimals(decimals);
    if (!std::isfinite(value)) return value;
    const long double scale = static_cast<long double>(pow10_ll(decimals));
    const long double scaled = static_cast<long double>(std::fabs(value)) * scale;
    if (scaled >= 9.0e18L) return value; // beyond integer rounding range; leave as is
    const long double rounded = std::floorl(scaled + 0.5L);
    const double magnitude = static_cast<double>(rounded / scale);
    return value < 0.0 ? -magnitude : magnitude;
}

std::string format_fixed(double value, int decimals) {
    check_decimals(decimals);
    if (!std::isfinite(value)) {
        if (std::isnan(value)) return "nan";
        return value > 0 ? "inf" : "-inf";
    }
    const long long scale = pow10_ll(decimals);
    const long double scaled =
        static_cast<long double>(std::fabs(value)) * static_cast<long double>(scale);
    if (scaled >= 9.0e18L) {
        char buf[512];
        std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
        return buf;
    }
    const long long units = static_cast<long long>(std::floorl(scaled + 0.5L));
    std::string out;
    if (value < 0.0 && units != 0) out += '-';
    out += std::to_string(units / scale);
    if (decimals > 0) {
        std::string frac = std::to_string(units % scale);
        out += '.';
        out.append(static_cast<size_t>(decimals) - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return buf;
    }
    return std::string(buf, ptr);
}

} // namespace effortprep
