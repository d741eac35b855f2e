#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace effortprep {

class Dataset;

// Effort model E = a * size^b with positive finite coefficients.
struct CocomoModel {
    double a = 2.4;
    double b = 1.05;
    std::string mode_label; // "organic", "semi-detached", "embedded"; empty for custom fits

    bool operator==(const CocomoModel&) const = default;
};

enum class CocomoMode { Organic, SemiDetached, Embedded };

// The three project-class coefficient pairs:
// organic (2.4, 1.05), semi-detached (3.0, 1.12), embedded (3.6, 1.21).
CocomoModel model_for_mode(CocomoMode mode);

// Token grammar: `organic | semi | embedded | custom:a=<real>,b=<real>`.
CocomoModel parse_model_token(std::string_view token);

// Human-readable description, e.g. "organic (a=2.4, b=1.05)".
std::string describe_model(const CocomoModel& model);

// a * size^b. size 0 yields 0; negative size is an error.
double estimate(const CocomoModel& model, double size);

/**
 * Least-squares calibration of (a, b) against observed (size, effort) pairs.
 *
 * The power law linearizes to ln(effort) = ln(a) + b * ln(size), so the fit
 * is closed-form ordinary least squares in log-log space. Diagnostics are the
 * residual sum of squares and coefficient of determination in that space.
 */
struct CalibrationResult {
    CocomoModel model;
    double log_rss = 0.0;
    double log_r2 = 0.0;
    std::size_t sample_count = 0;
};

CalibrationResult calibrate(const Dataset& dataset);

} // namespace effortprep
