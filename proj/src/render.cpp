#include "render.hpp"

#include "format.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace effortprep {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string bold(const std::string& text, bool color) {
    return color ? "\x1b[1m" + text + "\x1b[0m" : text;
}

// Right-aligns `cell` into a `width` column. Widths are computed from the
// plain text, so ANSI styling never shifts alignment.
std::string pad_left(const std::string& cell, std::size_t width) {
    if (cell.size() >= width) return cell;
    return std::string(width - cell.size(), ' ') + cell;
}

std::string pad_right(const std::string& cell, std::size_t width) {
    if (cell.size() >= width) return cell;
    return cell + std::string(width - cell.size(), ' ');
}

// Aligned text table: first column left-aligned, the rest right-aligned.
std::string layout_rows(const std::vector<std::vector<std::string>>& rows, bool color) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i > 0) line += "  ";
            line += i == 0 ? pad_right(rows[r][i], widths[i]) : pad_left(rows[r][i], widths[i]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += r == 0 ? bold(line, color) : line;
        out += '\n';
    }
    return out;
}

ordered_json stats_json(const ColumnStats& stats, int decimals) {
    return {{"min", round_half_away(stats.min, decimals)},
            {"max", round_half_away(stats.max, decimals)},
            {"mean", round_half_away(stats.mean, decimals)},
            {"count", stats.count}};
}

} // namespace

std::string dataset_info_table(const Dataset& dataset, int decimals, bool color) {
    std::string out = "dataset: " + dataset.name() + "\n";
    out += "records: " + std::to_string(dataset.size()) + "\n";
    if (dataset.empty()) return out;
    const ColumnStats size = column_stats(dataset, Column::Size);
    const ColumnStats effort = column_stats(dataset, Column::Effort);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"column", "min", "max", "mean"});
    rows.push_back({"kloc", format_fixed(size.min, decimals), format_fixed(size.max, decimals),
                    format_fixed(size.mean, decimals)});
    rows.push_back({"effort_pm", format_fixed(effort.min, decimals),
                    format_fixed(effort.max, decimals), format_fixed(effort.mean, decimals)});
    return out + layout_rows(rows, color);
}

std::string dataset_info_csv(const Dataset& dataset, int decimals) {
    std::string out =
        "name,count,kloc_min,kloc_max,kloc_mean,effort_min,effort_max,effort_mean\n";
    out += dataset.name() + "," + std::to_string(dataset.size());
    if (dataset.empty()) return out + ",,,,,,\n";
    const ColumnStats size = column_stats(dataset, Column::Size);
    const ColumnStats effort = column_stats(dataset, Column::Effort);
    for (double v : {size.min, size.max, size.mean, effort.min, effort.max, effort.mean}) {
        out += "," + format_fixed(v, decimals);
    }
    return out + "\n";
}

std::string dataset_info_json(const Dataset& dataset, int decimals) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "dataset_info";
    doc["name"] = dataset.name();
    doc["count"] = dataset.size();
    if (!dataset.empty()) {
        doc["columns"] = {{"kloc", stats_json(column_stats(dataset, Column::Size), decimals)},
                          {"effort_pm", stats_json(column_stats(dataset, Column::Effort), decimals)}};
    }
    return doc.dump(2) + "\n";
}

std::string comparison_table(const ComparisonTable& table, int decimals, bool color) {
    std::string out = "dataset: " + table.dataset_name + "\n";
    out += "model: " + table.model_description + "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"project_id", "raw_kloc"};
    for (const TechniqueColumn& column : table.columns) {
        header.push_back("est_" + column.spec.token());
    }
    rows.push_back(std::move(header));
    const std::size_t n = table.columns.front().rows.size();
    for (std::size_t r = 0; r < n; ++r) {
        const EstimationRow& base = table.columns.front().rows[r];
        std::vector<std::string> row = {std::to_string(base.project_id),
                                        format_fixed(base.raw_size, decimals)};
        for (const TechniqueColumn& column : table.columns) {
            row.push_back(format_fixed(column.rows[r].estimated_effort, decimals));
        }
        rows.push_back(std::move(row));
    }
    return out + layout_rows(rows, color);
}

std::string comparison_csv(const ComparisonTable& table, int decimals) {
    std::string out = "project_id,raw_kloc";
    for (const TechniqueColumn& column : table.columns) {
        out += ",est_" + column.spec.token();
    }
    out += '\n';
    const std::size_t n = table.columns.front().rows.size();
    for (std::size_t r = 0; r < n; ++r) {
        const EstimationRow& base = table.columns.front().rows[r];
        out += std::to_string(base.project_id) + "," + format_fixed(base.raw_size, decimals);
        for (const TechniqueColumn& column : table.columns) {
            out += "," + format_fixed(column.rows[r].estimated_effort, decimals);
        }
        out += '\n';
    }
    return out;
}

std::string comparison_json(const ComparisonTable& table, int decimals) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "comparison";
    doc["dataset"] = table.dataset_name;
    doc["model"] = table.model_description;
    ordered_json techniques = ordered_json::array();
    for (const TechniqueColumn& column : table.columns) {
        techniques.push_back(column.spec.token());
    }
    doc["techniques"] = std::move(techniques);
    ordered_json rows = ordered_json::array();
    const std::size_t n = table.columns.front().rows.size();
    for (std::size_t r = 0; r < n; ++r) {
        const EstimationRow& base = table.columns.front().rows[r];
        ordered_json row;
        row["project_id"] = base.project_id;
        row["raw_kloc"] = base.raw_size;
        row["actual_effort_pm"] = base.actual_effort_pm;
        ordered_json estimates = ordered_json::array();
        for (const TechniqueColumn& column : table.columns) {
            estimates.push_back(round_half_away(column.rows[r].estimated_effort, decimals));
        }
        row["estimates"] = std::move(estimates);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string report_table(const EvaluationReport& report, int decimals, bool color) {
    std::string out = "technique: " + report.technique + "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"project_id", "actual", "estimated", "mre"});
    for (const MrePair& pair : report.pairs) {
        rows.push_back({std::to_string(pair.project_id), format_fixed(pair.actual, decimals),
                        format_fixed(pair.estimated, decimals), format_fixed(pair.mre, decimals)});
    }
    out += layout_rows(rows, color);
    out += "mmre: " + format_fixed(report.mmre, decimals) + "\n";
    out += "pred(" + format_shortest(report.threshold) +
           "): " + format_fixed(report.pred, decimals) + "\n";
    out += "accurate: " + std::to_string(report.accurate_count) + "/" +
           std::to_string(report.pairs.size()) + "\n";
    return out;
}

std::string report_csv(const EvaluationReport& report, int decimals) {
    std::string out = "project_id,actual,estimated,mre\n";
    for (const MrePair& pair : report.pairs) {
        out += std::to_string(pair.project_id) + "," + format_fixed(pair.actual, decimals) + "," +
               format_fixed(pair.estimated, decimals) + "," + format_fixed(pair.mre, decimals) +
               "\n";
    }
    return out;
}

std::string report_json(const EvaluationReport& report, int decimals) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "evaluation";
    doc["technique"] = report.technique;
    doc["threshold"] = report.threshold;
    doc["unit_mismatch_warning"] = report.unit_mismatch_warning;
    doc["mmre"] = round_half_away(report.mmre, decimals);
    doc["pred"] = round_half_away(report.pred, decimals);
    doc["accurate_count"] = report.accurate_count;
    ordered_json rows = ordered_json::array();
    for (const MrePair& pair : report.pairs) {
        rows.push_back({{"project_id", pair.project_id},
                        {"actual", round_half_away(pair.actual, decimals)},
                        {"estimated", round_half_away(pair.estimated, decimals)},
                        {"mre", round_half_away(pair.mre, decimals)}});
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string calibration_table(const CalibrationResult& result, int decimals, bool color) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"coefficient", "value"});
    rows.push_back({"a", format_fixed(result.model.a, decimals)});
    rows.push_back({"b", format_fixed(result.model.b, decimals)});
    rows.push_back({"log_r2", format_fixed(result.log_r2, decimals)});
    rows.push_back({"log_rss", format_fixed(result.log_rss, decimals)});
    rows.push_back({"samples", std::to_string(result.sample_count)});
    return layout_rows(rows, color);
}

std::string calibration_csv(const CalibrationResult& result, int decimals) {
    return "a,b,log_r2,log_rss,samples\n" + format_fixed(result.model.a, decimals) + "," +
           format_fixed(result.model.b, decimals) + "," + format_fixed(result.log_r2, decimals) +
           "," + format_fixed(result.log_rss, decimals) + "," +
           std::to_string(result.sample_count) + "\n";
}

std::string calibration_json(const CalibrationResult& result, int decimals) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "calibration";
    doc["a"] = round_half_away(result.model.a, decimals);
    doc["b"] = round_half_away(result.model.b, decimals);
    doc["log_r2"] = round_half_away(result.log_r2, decimals);
    doc["log_rss"] = round_half_away(result.log_rss, decimals);
    doc["samples"] = result.sample_count;
    return doc.dump(2) + "\n";
}

} // namespace effortprep
