#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace effortprep {

// One software project: size in thousands of delivered lines of code and the
// observed effort in person-months.
struct ProjectRecord {
    int project_id = 0;
    double size_kloc = 0.0;
    double actual_effort_pm = 0.0;

    bool operator==(const ProjectRecord&) const = default;
};

// Immutable, validated, ordered collection of project records. Every record
// has finite positive size and effort and a unique positive id; source order
// is preserved. Safe for concurrent reads once constructed.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::string name, std::vector<ProjectRecord> records);

    const std::string& name() const noexcept { return name_; }
    const std::vector<ProjectRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    bool operator==(const Dataset&) const = default;

private:
    std::string name_;
    std::vector<ProjectRecord> records_;
};

enum class Column { Size, Effort };

struct ColumnStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::size_t count = 0;
};

// CSV header names for the three required columns. Extra columns are ignored.
struct CsvSchema {
    std::string id_column = "project_id";
    std::string size_column = "kloc";
    std::string effort_column = "actual_effort";
};

// The bundled 24-project IVR dataset (ids 1..24, row order preserved).
Dataset builtin_ivr_dataset();

// Exact single-pass min/max/mean over one column. Errors on an empty dataset.
ColumnStats column_stats(const Dataset& dataset, Column column);

std::vector<double> column_values(const Dataset& dataset, Column column);

// CSV ingestion: UTF-8, comma separated, one header row, decimal points,
// blank lines ignored. Errors carry the 1-based data row number.
Dataset load_dataset(const std::string& path, const CsvSchema& schema = {});
Dataset parse_dataset_csv(std::istream& in, std::string name, const CsvSchema& schema = {});

// Full-precision CSV emission; load_dataset(write_dataset(d)) == d.
void write_dataset(const Dataset& dataset, const std::string& path, const CsvSchema& schema = {});
void write_dataset_csv(const Dataset& dataset, std::ostream& out, const CsvSchema& schema = {});

} // namespace effortprep
