#pragma once

#include <span>
#include <string>
#include <string_view>

namespace effortprep {

enum class TransformKind { None, MinMax, Log };
enum class LogBase { Natural, Two, Ten };

// Preprocessor selection plus its parameters. `pad` widens the observed
// min/max bounds before min-max scaling (pad 0 is the textbook form; the
// bundled reference estimates use pad 1). `log_base` defaults to natural.
struct TransformSpec {
    TransformKind kind = TransformKind::None;
    double pad = 0.0;
    LogBase log_base = LogBase::Natural;

    static TransformSpec none() { return {}; }
    static TransformSpec minmax(double pad = 0.0) {
        return {TransformKind::MinMax, pad, LogBase::Natural};
    }
    static TransformSpec log(LogBase base = LogBase::Natural) {
        return {TransformKind::Log, 0.0, base};
    }

    // Token grammar: `none`, `norm[:pad=<real>]`, `log[:base=<e|2|10>]`.
    // Bare parameter values (`norm:1`, `log:e`) are accepted.
    static TransformSpec parse(std::string_view token);

    // Canonical token: "none", "norm", "norm:pad=1", "log", "log:2", "log:10".
    std::string token() const;

    // Filesystem-safe label for emitted chart files.
    std::string file_label() const;

    bool operator==(const TransformSpec&) const = default;
};

// A transform with frozen parameters. For min-max the padded bounds are
// captured at fit time; none/log carry no fitted state. Immutable, pure.
class FittedTransform {
public:
    static FittedTransform fit(const TransformSpec& spec, std::span<const double> values);

    double apply(double value) const;
    double invert(double value) const;

    const TransformSpec& spec() const noexcept { return spec_; }

    // Padded bounds; only meaningful for min-max fits.
    double lo() const;
    double hi() const;

private:
    FittedTransform(TransformSpec spec, double lo, double hi)
        : spec_(spec), lo_(lo), hi_(hi) {}

    TransformSpec spec_;
    double lo_ = 0.0;
    double hi_ = 0.0;
};

} // namespace effortprep
