#include "model.hpp"

#include "dataset.hpp"
#include "error.hpp"
#include "format.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace effortprep {

namespace {

void validate_coefficients(double a, double b) {
    if (!std::isfinite(a) || a <= 0.0 || !std::isfinite(b) || b <= 0.0) {
        fail(ErrorKind::InvalidArgument,
             "model coefficients must be finite and > 0 (got a=" + format_shortest(a) +
                 ", b=" + format_shortest(b) + ")");
    }
}

double parse_real(std::string_view text, std::string_view token) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        fail(ErrorKind::InvalidArgument,
             "bad model token '" + std::string(token) + "': '" + std::string(text) +
                 "' is not a number");
    }
    return value;
}

} // namespace

CocomoModel model_for_mode(CocomoMode mode) {
    switch (mode) {
    case CocomoMode::Organic: return {2.4, 1.05, "organic"};
    case CocomoMode::SemiDetached: return {3.0, 1.12, "semi-detached"};
    case CocomoMode::Embedded: return {3.6, 1.21, "embedded"};
    }
    fail(ErrorKind::InvalidArgument, "unknown mode");
}

CocomoModel parse_model_token(std::string_view token) {
    if (token == "organic") return model_for_mode(CocomoMode::Organic);
    if (token == "semi") return model_for_mode(CocomoMode::SemiDetached);
    if (token == "embedded") return model_for_mode(CocomoMode::Embedded);
    if (token.substr(0, 7) == "custom:") {
        std::string_view rest = token.substr(7);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos || rest.substr(0, 2) != "a=" ||
            rest.substr(comma + 1, 2) != "b=") {
            fail(ErrorKind::InvalidArgument,
                 "bad model token '" + std::string(token) +
                     "': expected custom:a=<real>,b=<real>");
        }
        const double a = parse_real(rest.substr(2, comma - 2), token);
        const double b = parse_real(rest.substr(comma + 3), token);
        validate_coefficients(a, b);
        return {a, b, ""};
    }
    fail(ErrorKind::InvalidArgument,
         "bad model token '" + std::string(token) +
             "': expected organic, semi, embedded or custom:a=<real>,b=<real>");
}

std::string describe_model(const CocomoModel& model) {
    const std::string label = model.mode_label.empty() ? "custom" : model.mode_label;
    return label + " (a=" + format_shortest(model.a) + ", b=" + format_shortest(model.b) + ")";
}

double estimate(const CocomoModel& model, double size) {
    validate_coefficients(model.a, model.b);
    if (!std::isfinite(size) || size < 0.0) {
        fail(ErrorKind::Domain, "size must be >= 0 (got " + format_shortest(size) + ")");
    }
    if (size == 0.0) return 0.0;
    return model.a * std::pow(size, model.b);
}

CalibrationResult calibrate(const Dataset& dataset) {
    if (dataset.size() < 2) {
        fail(ErrorKind::Domain, "calibration requires at least 2 records (got " +
                                    std::to_string(dataset.size()) + ")");
    }
    // Dataset invariants already guarantee positive sizes and efforts.
    std::vector<double> xs, ys;
    xs.reserve(dataset.size());
    ys.reserve(dataset.size());
    for (const ProjectRecord& record : dataset.records()) {
        xs.push_back(std::log(record.size_kloc));
        ys.push_back(std::log(record.actual_effort_pm));
    }
    const double n = static_cast<double>(xs.size());
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= n;
    y_mean /= n;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    if (sxx == 0.0) {
        fail(ErrorKind::Domain, "calibration requires at least 2 distinct sizes");
    }
    const double b = sxy / sxx;
    const double ln_a = y_mean - b * x_mean;
    const double a = std::exp(ln_a);
    if (!(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0)) {
        fail(ErrorKind::Domain,
             "fitted coefficients are not a positive power law (a=" + format_shortest(a) +
                 ", b=" + format_shortest(b) + ")");
    }

    double rss = 0.0, sst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double residual = ys[i] - (ln_a + b * xs[i]);
        rss += residual * residual;
        sst += (ys[i] - y_mean) * (ys[i] - y_mean);
    }
    CalibrationResult result;
    result.model = {a, b, "calibrated"};
    result.log_rss = rss;
    result.log_r2 = sst > 0.0 ? 1.0 - rss / sst : 1.0;
    result.sample_count = dataset.size();
    return result;
}

} // namespace effortprep
