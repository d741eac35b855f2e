#pragma once

#include "dataset.hpp"
#include "evaluation.hpp"
#include "model.hpp"
#include "pipeline.hpp"

#include <string>

namespace effortprep {

// Text, CSV and JSON renderings of the core result types. All numbers are
// rounded half away from zero at `decimals`; output bytes are deterministic
// for fixed input. JSON documents carry schema_version 1. `color` only adds
// ANSI bold around table headers.

std::string dataset_info_table(const Dataset& dataset, int decimals, bool color);
std::string dataset_info_csv(const Dataset& dataset, int decimals);
std::string dataset_info_json(const Dataset& dataset, int decimals);

// CSV columns: project_id, raw_kloc, then est_<technique> per column.
std::string comparison_table(const ComparisonTable& table, int decimals, bool color);
std::string comparison_csv(const ComparisonTable& table, int decimals);
std::string comparison_json(const ComparisonTable& table, int decimals);

std::string report_table(const EvaluationReport& report, int decimals, bool color);
std::string report_csv(const EvaluationReport& report, int decimals);
std::string report_json(const EvaluationReport& report, int decimals);

std::string calibration_table(const CalibrationResult& result, int decimals, bool color);
std::string calibration_csv(const CalibrationResult& result, int decimals);
std::string calibration_json(const CalibrationResult& result, int decimals);

} // namespace effortprep
