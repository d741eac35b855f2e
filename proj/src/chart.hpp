#pragma once

#include "pipeline.hpp"

#include <string>

namespace effortprep {

// Self-contained SVG chart of one technique column: project index on the
// horizontal axis, estimated effort on the vertical axis. Output bytes are
// deterministic for fixed input; each data point carries data-project and
// data-value attributes (data-value rounded at `decimals`).
std::string chart_svg(const TechniqueColumn& column, const std::string& dataset_name,
                      int decimals);

// Companion CSV of the plotted points (project_id, estimated_effort).
std::string chart_points_csv(const TechniqueColumn& column, int decimals);

} // namespace effortprep
