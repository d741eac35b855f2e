#include "evaluation.hpp"

#include "error.hpp"
#include "format.hpp"

#include <cmath>

namespace effortprep {

double mre(double actual, double estimated) {
    if (!std::isfinite(actual) || actual <= 0.0) {
        fail(ErrorKind::Domain, "MRE requires actual > 0 (got " + format_shortest(actual) + ")");
    }
    return std::fabs(actual - estimated) / actual;
}

EvaluationReport evaluate(std::span<const EstimationRow> rows, double threshold) {
    if (rows.empty()) {
        fail(ErrorKind::InvalidArgument, "cannot evaluate an empty row list");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        fail(ErrorKind::InvalidArgument,
             "threshold must lie in (0, 1) (got " + format_shortest(threshold) + ")");
    }
    EvaluationReport report;
    report.technique = "none";
    report.threshold = threshold;
    report.pairs.reserve(rows.size());
    double sum = 0.0;
    for (const EstimationRow& row : rows) {
        const double error = mre(row.actual_effort_pm, row.estimated_effort);
        report.pairs.push_back({row.project_id, row.actual_effort_pm, row.estimated_effort, error});
        sum += error;
        if (error <= threshold) ++report.accurate_count;
    }
    report.mmre = sum / static_cast<double>(report.pairs.size());
    report.pred = static_cast<double>(report.accurate_count) /
                  static_cast<double>(report.pairs.size());
    return report;
}

EvaluationReport evaluate_technique(const TechniqueColumn& column, double threshold) {
    EvaluationReport report = evaluate(column.rows, threshold);
    report.technique = column.spec.token();
    report.unit_mismatch_warning = column.spec.kind != TransformKind::None;
    return report;
}

} // namespace effortprep
