#include "pipeline.hpp"

#include "error.hpp"

namespace effortprep {

std::vector<EstimationRow> run_technique(const Dataset& dataset, const TransformSpec& spec,
                                         const CocomoModel& model) {
    if (dataset.empty()) {
        fail(ErrorKind::InvalidArgument, "cannot run a technique on an empty dataset");
    }
    const std::vector<double> sizes = column_values(dataset, Column::Size);
    const FittedTransform transform = FittedTransform::fit(spec, sizes);
    std::vector<EstimationRow> rows;
    rows.reserve(dataset.size());
    for (const ProjectRecord& record : dataset.records()) {
        EstimationRow row;
        row.project_id = record.project_id;
        row.raw_size = record.size_kloc;
        row.transformed_size = transform.apply(record.size_kloc);
        row.estimated_effort = estimate(model, row.transformed_size);
        row.actual_effort_pm = record.actual_effort_pm;
        rows.push_back(row);
    }
    return rows;
}

ComparisonTable compare_techniques(const Dataset& dataset, std::span<const TransformSpec> specs,
                                   const CocomoModel& model) {
    if (specs.empty()) {
        fail(ErrorKind::InvalidArgument, "comparison requires at least one technique");
    }
    ComparisonTable table;
    table.dataset_name = dataset.name();
    table.model_description = describe_model(model);
    table.columns.reserve(specs.size());
    for (const TransformSpec& spec : specs) {
        try {
            table.columns.push_back({spec, run_technique(dataset, spec, model)});
        } catch (const Error& e) {
            throw Error(e.kind(), "technique '" + spec.token() + "': " + e.what());
        }
    }
    return table;
}

} // namespace effortprep
