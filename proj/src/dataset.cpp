#include "dataset.hpp"

#include "error.hpp"
#include "format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace effortprep {

namespace {

void validate_record(const ProjectRecord& record, const std::string& where) {
    if (record.project_id <= 0) {
        fail(ErrorKind::Validation,
             where + ": project id must be a positive integer (got " +
                 std::to_string(record.project_id) + ")");
    }
    if (!std::isfinite(record.size_kloc) || record.size_kloc <= 0.0) {
        fail(ErrorKind::Validation,
             where + ": size must be > 0 and finite (got " +
                 format_shortest(record.size_kloc) + ")");
    }
    if (!std::isfinite(record.actual_effort_pm) || record.actual_effort_pm <= 0.0) {
        fail(ErrorKind::Validation,
             where + ": effort must be > 0 and finite (got " +
                 format_shortest(record.actual_effort_pm) + ")");
    }
}

std::string row_label(std::size_t data_row) {
    return "row " + std::to_string(data_row);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

double parse_double_cell(const std::string& cell, const std::string& where,
                         const std::string& column) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || cell.empty()) {
        fail(ErrorKind::Parse,
             where + ": column '" + column + "' is not a number (got '" + cell + "')");
    }
    return value;
}

int parse_int_cell(const std::string& cell, const std::string& where,
                   const std::string& column) {
    int value = 0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || cell.empty()) {
        fail(ErrorKind::Parse,
             where + ": column '" + column + "' is not an integer (got '" + cell + "')");
    }
    return value;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& wanted) {
    std::size_t found = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == wanted) {
            if (found != header.size()) {
                fail(ErrorKind::Parse, "header names column '" + wanted + "' more than once");
            }
            found = i;
        }
    }
    if (found == header.size()) {
        fail(ErrorKind::Parse, "header is missing column '" + wanted + "'");
    }
    return found;
}

} // namespace

Dataset::Dataset(std::string name, std::vector<ProjectRecord> records)
    : name_(std::move(name)), records_(std::move(records)) {
    std::unordered_set<int> seen;
    seen.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        validate_record(records_[i], row_label(i + 1));
        if (!seen.insert(records_[i].project_id).second) {
            fail(ErrorKind::Validation,
                 row_label(i + 1) + ": duplicate project id " +
                     std::to_string(records_[i].project_id));
        }
    }
}

Dataset builtin_ivr_dataset() {
    static const std::vector<ProjectRecord> kRecords = {
        {1, 16.2, 86.1},   {2, 5.34, 24.02},  {3, 7.6, 36.05},  {4, 4.7, 20.74},
        {5, 3.1, 12.85},   {6, 5.2, 23.3},    {7, 6.8, 31.72},  {8, 6.4, 29.59},
        {9, 7.2, 33.88},   {10, 5.4, 24.34},  {11, 8.5, 41.01}, {12, 7.8, 37.15},
        {13, 12.5, 63.9},  {14, 10.4, 51.71}, {15, 9.5, 46.6},  {16, 3.4, 14.29},
        {17, 6.8, 31.73},  {18, 5.8, 26.42},  {19, 7.4, 34.96}, {20, 7.2, 33.88},
        {21, 8.6, 41.56},  {22, 6.4, 29.59},  {23, 10.6, 52.86}, {24, 6.3, 29.06},
    };
    return Dataset("ivr", kRecords);
}

ColumnStats column_stats(const Dataset& dataset, Column column) {
    if (dataset.empty()) {
        fail(ErrorKind::InvalidArgument, "column stats require a non-empty dataset");
    }
    ColumnStats stats;
    stats.count = dataset.size();
    double sum = 0.0;
    bool first = true;
    for (const ProjectRecord& record : dataset.records()) {
        const double v = column == Column::Size ? record.size_kloc : record.actual_effort_pm;
        if (first) {
            stats.min = stats.max = v;
            first = false;
        } else {
            stats.min = std::min(stats.min, v);
            stats.max = std::max(stats.max, v);
        }
        sum += v;
    }
    stats.mean = sum / static_cast<double>(stats.count);
    return stats;
}

std::vector<double> column_values(const Dataset& dataset, Column column) {
    std::vector<double> values;
    values.reserve(dataset.size());
    for (const ProjectRecord& record : dataset.records()) {
        values.push_back(column == Column::Size ? record.size_kloc : record.actual_effort_pm);
    }
    return values;
}

Dataset parse_dataset_csv(std::istream& in, std::string name, const CsvSchema& schema) {
    std::string line;
    bool have_header = false;
    std::size_t id_at = 0, size_at = 0, effort_at = 0, width = 0;
    std::vector<ProjectRecord> records;
    std::size_t data_row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        for (std::string& cell : cells) cell = trim(cell);
        if (!have_header) {
            id_at = find_column(cells, schema.id_column);
            size_at = find_column(cells, schema.size_column);
            effort_at = find_column(cells, schema.effort_column);
            width = cells.size();
            have_header = true;
            continue;
        }
        ++data_row;
        const std::string where = row_label(data_row);
        if (cells.size() != width) {
            fail(ErrorKind::Parse, where + ": expected " + std::to_string(width) +
                                       " columns, got " + std::to_string(cells.size()));
        }
        ProjectRecord record;
        record.project_id = parse_int_cell(cells[id_at], where, schema.id_column);
        record.size_kloc = parse_double_cell(cells[size_at], where, schema.size_column);
        record.actual_effort_pm = parse_double_cell(cells[effort_at], where, schema.effort_column);
        records.push_back(record);
    }
    if (!have_header) {
        fail(ErrorKind::Parse, "no header row found");
    }
    return Dataset(std::move(name), std::move(records));
}

Dataset load_dataset(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Io, "cannot open '" + path + "'");
    }
    try {
        return parse_dataset_csv(in, std::filesystem::path(path).filename().string(), schema);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

void write_dataset_csv(const Dataset& dataset, std::ostream& out, const CsvSchema& schema) {
    out << schema.id_column << ',' << schema.size_column << ',' << schema.effort_column << '\n';
    for (const ProjectRecord& record : dataset.records()) {
        out << record.project_id << ',' << format_shortest(record.size_kloc) << ','
            << format_shortest(record.actual_effort_pm) << '\n';
    }
}

void write_dataset(const Dataset& dataset, const std::string& path, const CsvSchema& schema) {
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::Io, "cannot write '" + path + "'");
    }
    write_dataset_csv(dataset, out, schema);
    out.flush();
    if (!out) {
        fail(ErrorKind::Io, "failed while writing '" + path + "'");
    }
}

} // namespace effortprep
