#pragma once

#include "dataset.hpp"
#include "model.hpp"
#include "preprocess.hpp"

#include <span>
#include <string>
#include <vector>

namespace effortprep {

// One project pushed through one technique. `estimated_effort` is in
// person-months for the identity technique and in transformed units
// otherwise; `transformed_size` is the model input that produced it.
struct EstimationRow {
    int project_id = 0;
    double raw_size = 0.0;
    double transformed_size = 0.0;
    double estimated_effort = 0.0;
    double actual_effort_pm = 0.0;

    bool operator==(const EstimationRow&) const = default;
};

struct TechniqueColumn {
    TransformSpec spec;
    std::vector<EstimationRow> rows;

    bool operator==(const TechniqueColumn&) const = default;
};

// Side-by-side estimates, one column per technique, rows aligned by project.
struct ComparisonTable {
    std::string dataset_name;
    std::string model_description;
    std::vector<TechniqueColumn> columns;

    bool operator==(const ComparisonTable&) const = default;
};

// Fits the transform once on the full size column, then maps each record
// through apply + estimate. Row order follows the dataset.
std::vector<EstimationRow> run_technique(const Dataset& dataset, const TransformSpec& spec,
                                         const CocomoModel& model);

// One run_technique column per spec; errors are annotated with the failing
// technique token. Requires at least one spec.
ComparisonTable compare_techniques(const Dataset& dataset, std::span<const TransformSpec> specs,
                                   const CocomoModel& model);

} // namespace effortprep
