#include "preprocess.hpp"

#include "error.hpp"
#include "format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace effortprep {

namespace {

[[noreturn]] void bad_token(std::string_view token, const std::string& why) {
    fail(ErrorKind::InvalidArgument,
         "bad technique token '" + std::string(token) + "': " + why);
}

double parse_pad(std::string_view token, std::string_view text) {
    double pad = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), pad);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        bad_token(token, "pad is not a number");
    }
    if (!std::isfinite(pad) || pad < 0.0) {
        bad_token(token, "pad must be finite and >= 0");
    }
    return pad;
}

LogBase parse_base(std::string_view token, std::string_view text) {
    if (text == "e") return LogBase::Natural;
    if (text == "2") return LogBase::Two;
    if (text == "10") return LogBase::Ten;
    bad_token(token, "base must be e, 2 or 10");
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix) {
    if (text.substr(0, prefix.size()) == prefix) return text.substr(prefix.size());
    return text;
}

} // namespace

TransformSpec TransformSpec::parse(std::string_view token) {
    if (token == "none") return none();
    if (token == "norm") return minmax();
    if (token == "log") return log();
    if (token.substr(0, 5) == "norm:") {
        return minmax(parse_pad(token, strip_prefix(token.substr(5), "pad=")));
    }
    if (token.substr(0, 4) == "log:") {
        return log(parse_base(token, strip_prefix(token.substr(4), "base=")));
    }
    bad_token(token, "expected none, norm[:pad=<real>] or log[:base=<e|2|10>]");
}

std::string TransformSpec::token() const {
    switch (kind) {
    case TransformKind::None:
        return "none";
    case TransformKind::MinMax:
        return pad == 0.0 ? "norm" : "norm:pad=" + format_shortest(pad);
    case TransformKind::Log:
        switch (log_base) {
        case LogBase::Natural: return "log";
        case LogBase::Two: return "log:2";
        case LogBase::Ten: return "log:10";
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown transform kind");
}

std::string TransformSpec::file_label() const {
    switch (kind) {
    case TransformKind::None:
        return "none";
    case TransformKind::MinMax:
        return pad == 0.0 ? "norm" : "norm_pad" + format_shortest(pad);
    case TransformKind::Log:
        switch (log_base) {
        case LogBase::Natural: return "log";
        case LogBase::Two: return "log2";
        case LogBase::Ten: return "log10";
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown transform kind");
}

FittedTransform FittedTransform::fit(const TransformSpec& spec, std::span<const double> values) {
    if (!std::isfinite(spec.pad) || spec.pad < 0.0) {
        fail(ErrorKind::InvalidArgument, "pad must be finite and >= 0");
    }
    if (values.empty()) {
        fail(ErrorKind::InvalidArgument, "cannot fit a transform on an empty column");
    }
    switch (spec.kind) {
    case TransformKind::None:
        return FittedTransform(spec, 0.0, 0.0);
    case TransformKind::Log:
        for (double v : values) {
            if (!(v > 0.0)) {
                fail(ErrorKind::Domain,
                     "log transform requires positive values (got " + format_shortest(v) + ")");
            }
        }
        return FittedTransform(spec, 0.0, 0.0);
    case TransformKind::MinMax: {
        const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
        const double lo = *min_it - spec.pad;
        const double hi = *max_it + spec.pad;
        if (!(lo < hi)) {
            fail(ErrorKind::Domain,
                 "degenerate range: padded bounds [" + format_shortest(lo) + ", " +
                     format_shortest(hi) + "] do not satisfy lo < hi");
        }
        return FittedTransform(spec, lo, hi);
    }
    }
    fail(ErrorKind::InvalidArgument, "unknown transform kind");
}

double FittedTransform::apply(double value) const {
    switch (spec_.kind) {
    case TransformKind::None:
        return value;
    case TransformKind::MinMax:
        return (value - lo_) / (hi_ - lo_);
    case TransformKind::Log:
        if (!(value > 0.0)) {
            fail(ErrorKind::Domain,
                 "log transform requires a positive value (got " + format_shortest(value) + ")");
        }
        switch (spec_.log_base) {
        case LogBase::Natural: return std::log(value);
        case LogBase::Two: return std::log2(value);
        case LogBase::Ten: return std::log10(value);
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown transform kind");
}

double FittedTransform::invert(double value) const {
    switch (spec_.kind) {
    case TransformKind::None:
        return value;
    case TransformKind::MinMax:
        return value * (hi_ - lo_) + lo_;
    case TransformKind::Log:
        switch (spec_.log_base) {
        case LogBase::Natural: return std::exp(value);
        case LogBase::Two: return std::exp2(value);
        case LogBase::Ten: return std::pow(10.0, value);
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown transform kind");
}

double FittedTransform::lo() const {
    if (spec_.kind != TransformKind::MinMax) {
        fail(ErrorKind::InvalidArgument, "bounds are only defined for min-max fits");
    }
    return lo_;
}

double FittedTransform::hi() const {
    if (spec_.kind != TransformKind::MinMax) {
        fail(ErrorKind::InvalidArgument, "bounds are only defined for min-max fits");
    }
    return hi_;
}

} // namespace effortprep
