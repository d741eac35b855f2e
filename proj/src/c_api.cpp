#include "effortprep/effort_prep.h"

#include "chart.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "evaluation.hpp"
#include "format.hpp"
#include "model.hpp"
#include "pipeline.hpp"
#include "preprocess.hpp"
#include "render.hpp"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

struct ep_dataset {
    effortprep::Dataset value;
};

struct ep_transform {
    effortprep::FittedTransform value;
    std::string token;
};

struct ep_comparison {
    effortprep::ComparisonTable value;
    std::vector<std::string> tokens;
    std::vector<std::string> file_labels;
};

struct ep_report {
    effortprep::EvaluationReport value;
};

namespace {

using effortprep::Error;
using effortprep::ErrorKind;

thread_local std::string g_last_error;

ep_status status_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return EP_ERROR_INVALID_ARGUMENT;
    case ErrorKind::Io: return EP_ERROR_IO;
    case ErrorKind::Parse: return EP_ERROR_PARSE;
    case ErrorKind::Validation: return EP_ERROR_VALIDATION;
    case ErrorKind::Domain: return EP_ERROR_DOMAIN;
    }
    return EP_ERROR_INTERNAL;
}

ep_status set_error(ep_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes + ep_last_error().
template <typename Body>
ep_status guarded(Body&& body) {
    try {
        body();
        return EP_OK;
    } catch (const Error& e) {
        return set_error(status_for(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(EP_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(EP_ERROR_INTERNAL, e.what());
    } catch (...) {
        return set_error(EP_ERROR_INTERNAL, "unknown error");
    }
}

ep_status require(bool condition, const char* what) {
    if (condition) return EP_OK;
    return set_error(EP_ERROR_INVALID_ARGUMENT, what);
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

const effortprep::TechniqueColumn* column_at(const ep_comparison* comparison, size_t technique) {
    if (technique >= comparison->value.columns.size()) {
        effortprep::fail(ErrorKind::InvalidArgument,
                         "technique index " + std::to_string(technique) + " out of range (have " +
                             std::to_string(comparison->value.columns.size()) + ")");
    }
    return &comparison->value.columns[technique];
}

template <typename Table, typename Csv, typename Json>
std::string render_as(ep_format format, Table&& table, Csv&& csv, Json&& json) {
    switch (format) {
    case EP_FORMAT_TABLE: return table();
    case EP_FORMAT_CSV: return csv();
    case EP_FORMAT_JSON: return json();
    }
    effortprep::fail(ErrorKind::InvalidArgument,
                     "unknown format value " + std::to_string(static_cast<int>(format)));
}

} // namespace

extern "C" {

const char* ep_version(void) { return "0.1.0"; }

const char* ep_last_error(void) { return g_last_error.c_str(); }

void ep_string_free(char* text) { delete[] text; }

/* ---- datasets ---------------------------------------------------------- */

ep_status ep_dataset_builtin(ep_dataset** out) {
    if (auto bad = require(out != nullptr, "out must not be null")) return bad;
    return guarded([&] { *out = new ep_dataset{effortprep::builtin_ivr_dataset()}; });
}

ep_status ep_dataset_load_csv(const char* path, const char* id_column, const char* size_column,
                              const char* effort_column, ep_dataset** out) {
    if (auto bad = require(path != nullptr && out != nullptr, "path and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        effortprep::CsvSchema schema;
        if (id_column != nullptr) schema.id_column = id_column;
        if (size_column != nullptr) schema.size_column = size_column;
        if (effort_column != nullptr) schema.effort_column = effort_column;
        *out = new ep_dataset{effortprep::load_dataset(path, schema)};
    });
}

ep_status ep_dataset_write_csv(const ep_dataset* dataset, const char* path) {
    if (auto bad = require(dataset != nullptr && path != nullptr,
                           "dataset and path must not be null")) {
        return bad;
    }
    return guarded([&] { effortprep::write_dataset(dataset->value, path); });
}

void ep_dataset_free(ep_dataset* dataset) { delete dataset; }

const char* ep_dataset_name(const ep_dataset* dataset) {
    return dataset != nullptr ? dataset->value.name().c_str() : nullptr;
}

size_t ep_dataset_count(const ep_dataset* dataset) {
    return dataset != nullptr ? dataset->value.size() : 0;
}

ep_status ep_dataset_record(const ep_dataset* dataset, size_t index, int32_t* project_id,
                            double* size_kloc, double* effort_pm) {
    if (auto bad = require(dataset != nullptr, "dataset must not be null")) return bad;
    if (index >= dataset->value.size()) {
        return set_error(EP_ERROR_INVALID_ARGUMENT,
                         "record index " + std::to_string(index) + " out of range (have " +
                             std::to_string(dataset->value.size()) + ")");
    }
    const effortprep::ProjectRecord& record = dataset->value.records()[index];
    if (project_id != nullptr) *project_id = record.project_id;
    if (size_kloc != nullptr) *size_kloc = record.size_kloc;
    if (effort_pm != nullptr) *effort_pm = record.actual_effort_pm;
    return EP_OK;
}

ep_status ep_dataset_column_stats(const ep_dataset* dataset, ep_column column,
                                  ep_column_stats* out) {
    if (auto bad = require(dataset != nullptr && out != nullptr,
                           "dataset and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::ColumnStats stats = effortprep::column_stats(
            dataset->value,
            column == EP_COLUMN_SIZE ? effortprep::Column::Size : effortprep::Column::Effort);
        *out = {stats.min, stats.max, stats.mean, stats.count};
    });
}

ep_status ep_dataset_render(const ep_dataset* dataset, ep_format format, int decimals, int color,
                            char** out) {
    if (auto bad = require(dataset != nullptr && out != nullptr,
                           "dataset and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        *out = copy_string(render_as(
            format,
            [&] { return effortprep::dataset_info_table(dataset->value, decimals, color != 0); },
            [&] { return effortprep::dataset_info_csv(dataset->value, decimals); },
            [&] { return effortprep::dataset_info_json(dataset->value, decimals); }));
    });
}

/* ---- preprocessing transforms ------------------------------------------ */

ep_status ep_transform_fit(const char* technique, const double* values, size_t count,
                           ep_transform** out) {
    if (auto bad = require(technique != nullptr && out != nullptr,
                           "technique and out must not be null")) {
        return bad;
    }
    if (auto bad = require(values != nullptr || count == 0,
                           "values must not be null when count > 0")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::TransformSpec spec = effortprep::TransformSpec::parse(technique);
        effortprep::FittedTransform fitted =
            effortprep::FittedTransform::fit(spec, std::span<const double>(values, count));
        *out = new ep_transform{std::move(fitted), spec.token()};
    });
}

ep_status ep_transform_apply(const ep_transform* transform, double value, double* out) {
    if (auto bad = require(transform != nullptr && out != nullptr,
                           "transform and out must not be null")) {
        return bad;
    }
    return guarded([&] { *out = transform->value.apply(value); });
}

ep_status ep_transform_invert(const ep_transform* transform, double value, double* out) {
    if (auto bad = require(transform != nullptr && out != nullptr,
                           "transform and out must not be null")) {
        return bad;
    }
    return guarded([&] { *out = transform->value.invert(value); });
}

const char* ep_transform_token(const ep_transform* transform) {
    return transform != nullptr ? transform->token.c_str() : nullptr;
}

void ep_transform_free(ep_transform* transform) { delete transform; }

/* ---- effort model ------------------------------------------------------ */

ep_status ep_model_parse(const char* token, double* a, double* b) {
    if (auto bad = require(token != nullptr && a != nullptr && b != nullptr,
                           "token, a and b must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::CocomoModel model = effortprep::parse_model_token(token);
        *a = model.a;
        *b = model.b;
    });
}

ep_status ep_estimate(double a, double b, double size, double* out) {
    if (auto bad = require(out != nullptr, "out must not be null")) return bad;
    return guarded([&] { *out = effortprep::estimate({a, b, ""}, size); });
}

ep_status ep_mre(double actual, double estimated, double* out) {
    if (auto bad = require(out != nullptr, "out must not be null")) return bad;
    return guarded([&] { *out = effortprep::mre(actual, estimated); });
}

ep_status ep_calibrate(const ep_dataset* dataset, ep_calibration* out) {
    if (auto bad = require(dataset != nullptr && out != nullptr,
                           "dataset and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::CalibrationResult result = effortprep::calibrate(dataset->value);
        *out = {result.model.a, result.model.b, result.log_rss, result.log_r2,
                result.sample_count};
    });
}

ep_status ep_calibration_render(const ep_calibration* calibration, ep_format format, int decimals,
                                int color, char** out) {
    if (auto bad = require(calibration != nullptr && out != nullptr,
                           "calibration and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        effortprep::CalibrationResult result;
        result.model = {calibration->a, calibration->b, "calibrated"};
        result.log_rss = calibration->log_rss;
        result.log_r2 = calibration->log_r2;
        result.sample_count = calibration->samples;
        *out = copy_string(render_as(
            format,
            [&] { return effortprep::calibration_table(result, decimals, color != 0); },
            [&] { return effortprep::calibration_csv(result, decimals); },
            [&] { return effortprep::calibration_json(result, decimals); }));
    });
}

/* ---- technique comparison ---------------------------------------------- */

ep_status ep_compare(const ep_dataset* dataset, const char* const* techniques,
                     size_t technique_count, const char* model_token, ep_comparison** out) {
    if (auto bad = require(dataset != nullptr && out != nullptr && model_token != nullptr,
                           "dataset, model_token and out must not be null")) {
        return bad;
    }
    if (auto bad = require(techniques != nullptr && technique_count > 0,
                           "at least one technique token is required")) {
        return bad;
    }
    return guarded([&] {
        std::vector<effortprep::TransformSpec> specs;
        specs.reserve(technique_count);
        for (size_t i = 0; i < technique_count; ++i) {
            if (techniques[i] == nullptr) {
                effortprep::fail(ErrorKind::InvalidArgument, "technique token must not be null");
            }
            specs.push_back(effortprep::TransformSpec::parse(techniques[i]));
        }
        const effortprep::CocomoModel model = effortprep::parse_model_token(model_token);
        auto handle = std::make_unique<ep_comparison>();
        handle->value = effortprep::compare_techniques(dataset->value, specs, model);
        for (const effortprep::TechniqueColumn& column : handle->value.columns) {
            handle->tokens.push_back(column.spec.token());
            handle->file_labels.push_back(column.spec.file_label());
        }
        *out = handle.release();
    });
}

size_t ep_comparison_row_count(const ep_comparison* comparison) {
    if (comparison == nullptr || comparison->value.columns.empty()) return 0;
    return comparison->value.columns.front().rows.size();
}

size_t ep_comparison_technique_count(const ep_comparison* comparison) {
    return comparison != nullptr ? comparison->value.columns.size() : 0;
}

const char* ep_comparison_technique(const ep_comparison* comparison, size_t technique) {
    if (comparison == nullptr || technique >= comparison->tokens.size()) return nullptr;
    return comparison->tokens[technique].c_str();
}

const char* ep_comparison_file_label(const ep_comparison* comparison, size_t technique) {
    if (comparison == nullptr || technique >= comparison->file_labels.size()) return nullptr;
    return comparison->file_labels[technique].c_str();
}

ep_status ep_comparison_cell(const ep_comparison* comparison, size_t row, size_t technique,
                             ep_estimation* out) {
    if (auto bad = require(comparison != nullptr && out != nullptr,
                           "comparison and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::TechniqueColumn* column = column_at(comparison, technique);
        if (row >= column->rows.size()) {
            effortprep::fail(ErrorKind::InvalidArgument,
                             "row index " + std::to_string(row) + " out of range (have " +
                                 std::to_string(column->rows.size()) + ")");
        }
        const effortprep::EstimationRow& cell = column->rows[row];
        *out = {cell.project_id, cell.raw_size, cell.transformed_size, cell.estimated_effort,
                cell.actual_effort_pm};
    });
}

ep_status ep_comparison_render(const ep_comparison* comparison, ep_format format, int decimals,
                               int color, char** out) {
    if (auto bad = require(comparison != nullptr && out != nullptr,
                           "comparison and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        *out = copy_string(render_as(
            format,
            [&] { return effortprep::comparison_table(comparison->value, decimals, color != 0); },
            [&] { return effortprep::comparison_csv(comparison->value, decimals); },
            [&] { return effortprep::comparison_json(comparison->value, decimals); }));
    });
}

void ep_comparison_free(ep_comparison* comparison) { delete comparison; }

/* ---- accuracy metrics -------------------------------------------------- */

ep_status ep_evaluate(const ep_comparison* comparison, size_t technique, double threshold,
                      ep_report** out) {
    if (auto bad = require(comparison != nullptr && out != nullptr,
                           "comparison and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::TechniqueColumn* column = column_at(comparison, technique);
        *out = new ep_report{effortprep::evaluate_technique(*column, threshold)};
    });
}

size_t ep_report_count(const ep_report* report) {
    return report != nullptr ? report->value.pairs.size() : 0;
}

ep_status ep_report_row(const ep_report* report, size_t index, int32_t* project_id, double* actual,
                        double* estimated, double* mre) {
    if (auto bad = require(report != nullptr, "report must not be null")) return bad;
    if (index >= report->value.pairs.size()) {
        return set_error(EP_ERROR_INVALID_ARGUMENT,
                         "row index " + std::to_string(index) + " out of range (have " +
                             std::to_string(report->value.pairs.size()) + ")");
    }
    const effortprep::MrePair& pair = report->value.pairs[index];
    if (project_id != nullptr) *project_id = pair.project_id;
    if (actual != nullptr) *actual = pair.actual;
    if (estimated != nullptr) *estimated = pair.estimated;
    if (mre != nullptr) *mre = pair.mre;
    return EP_OK;
}

ep_status ep_report_summary(const ep_report* report, double* mmre, double* pred,
                            size_t* accurate_count) {
    if (auto bad = require(report != nullptr, "report must not be null")) return bad;
    if (mmre != nullptr) *mmre = report->value.mmre;
    if (pred != nullptr) *pred = report->value.pred;
    if (accurate_count != nullptr) *accurate_count = report->value.accurate_count;
    return EP_OK;
}

int ep_report_unit_warning(const ep_report* report) {
    return report != nullptr && report->value.unit_mismatch_warning ? 1 : 0;
}

ep_status ep_report_render(const ep_report* report, ep_format format, int decimals, int color,
                           char** out) {
    if (auto bad = require(report != nullptr && out != nullptr,
                           "report and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        *out = copy_string(render_as(
            format,
            [&] { return effortprep::report_table(report->value, decimals, color != 0); },
            [&] { return effortprep::report_csv(report->value, decimals); },
            [&] { return effortprep::report_json(report->value, decimals); }));
    });
}

void ep_report_free(ep_report* report) { delete report; }

/* ---- charts ------------------------------------------------------------ */

ep_status ep_chart_svg(const ep_comparison* comparison, size_t technique, int decimals,
                       char** out) {
    if (auto bad = require(comparison != nullptr && out != nullptr,
                           "comparison and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::TechniqueColumn* column = column_at(comparison, technique);
        *out = copy_string(
            effortprep::chart_svg(*column, comparison->value.dataset_name, decimals));
    });
}

ep_status ep_chart_csv(const ep_comparison* comparison, size_t technique, int decimals,
                       char** out) {
    if (auto bad = require(comparison != nullptr && out != nullptr,
                           "comparison and out must not be null")) {
        return bad;
    }
    return guarded([&] {
        const effortprep::TechniqueColumn* column = column_at(comparison, technique);
        *out = copy_string(effortprep::chart_points_csv(*column, decimals));
    });
}

} // extern "C"
