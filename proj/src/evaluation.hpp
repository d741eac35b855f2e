#pragma once

#include "pipeline.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace effortprep {

struct MrePair {
    int project_id = 0;
    double actual = 0.0;
    double estimated = 0.0;
    double mre = 0.0;

    bool operator==(const MrePair&) const = default;
};

// Accuracy report: per-project magnitude of relative error, its mean, and
// PRED(threshold) = fraction of projects with MRE <= threshold (ties count
// as accurate). `unit_mismatch_warning` is set when the estimates being
// scored are in transformed units rather than person-months.
struct EvaluationReport {
    std::string technique;
    double threshold = 0.25;
    std::vector<MrePair> pairs;
    double mmre = 0.0;
    double pred = 0.0;
    std::size_t accurate_count = 0;
    bool unit_mismatch_warning = false;

    bool operator==(const EvaluationReport&) const = default;
};

// MRE = |actual - estimated| / actual. Requires actual > 0.
double mre(double actual, double estimated);

EvaluationReport evaluate(std::span<const EstimationRow> rows, double threshold = 0.25);

// evaluate() plus technique labeling and the unit-mismatch flag for any
// technique other than the identity.
EvaluationReport evaluate_technique(const TechniqueColumn& column, double threshold = 0.25);

} // namespace effortprep
