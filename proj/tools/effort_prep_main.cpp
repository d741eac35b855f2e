// effort-prep: command-line front end over the effortprep C API.
//
// Subcommands: dataset info, estimate, compare, metrics, calibrate, plot.
// Exit status: 0 success, 2 usage/validation error, 1 internal error.

#include <effortprep/effort_prep.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#if defined(_WIN32)
#include <io.h>
#define EP_ISATTY _isatty
#define EP_FILENO _fileno
#else
#include <unistd.h>
#define EP_ISATTY isatty
#define EP_FILENO fileno
#endif

namespace {

struct DatasetDeleter {
    void operator()(ep_dataset* p) const { ep_dataset_free(p); }
};
struct ComparisonDeleter {
    void operator()(ep_comparison* p) const { ep_comparison_free(p); }
};
struct ReportDeleter {
    void operator()(ep_report* p) const { ep_report_free(p); }
};

using DatasetHandle = std::unique_ptr<ep_dataset, DatasetDeleter>;
using ComparisonHandle = std::unique_ptr<ep_comparison, ComparisonDeleter>;
using ReportHandle = std::unique_ptr<ep_report, ReportDeleter>;

// Takes ownership of a C-API string buffer.
std::string take_string(char* text) {
    std::string out = text != nullptr ? text : "";
    ep_string_free(text);
    return out;
}

int exit_code_for(ep_status status) {
    if (status == EP_OK) return 0;
    return status == EP_ERROR_INTERNAL ? 1 : 2;
}

int report_failure(ep_status status) {
    std::cerr << "effort-prep: error: " << ep_last_error() << "\n";
    return exit_code_for(status);
}

struct Options {
    bool builtin = false;
    std::string input;
    std::string techniques = "none,norm:pad=1,log:e";
    std::string mode = "organic";
    std::string format = "table";
    int decimals = 4;
    std::string out;
    double threshold = 0.25;
};

ep_format format_of(const Options& options) {
    if (options.format == "csv") return EP_FORMAT_CSV;
    if (options.format == "json") return EP_FORMAT_JSON;
    return EP_FORMAT_TABLE;
}

bool color_enabled() {
    if (std::getenv("EFFORT_PREP_NO_COLOR") != nullptr) return false;
    return EP_ISATTY(EP_FILENO(stdout)) != 0;
}

std::vector<std::string> split_tokens(const std::string& joined) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : joined) {
        if (c == ',') {
            tokens.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    tokens.push_back(current);
    return tokens;
}

int open_dataset(const Options& options, const std::string& positional, DatasetHandle& handle) {
    ep_dataset* raw = nullptr;
    ep_status status = EP_OK;
    const std::string& path = !positional.empty() ? positional : options.input;
    if (!path.empty() && !options.builtin) {
        status = ep_dataset_load_csv(path.c_str(), nullptr, nullptr, nullptr, &raw);
    } else {
        status = ep_dataset_builtin(&raw);
    }
    if (status != EP_OK) return report_failure(status);
    handle.reset(raw);
    return 0;
}

int build_comparison(const Options& options, const DatasetHandle& dataset,
                     ComparisonHandle& handle) {
    std::vector<std::string> tokens = split_tokens(options.techniques);
    std::vector<const char*> pointers;
    pointers.reserve(tokens.size());
    for (const std::string& token : tokens) pointers.push_back(token.c_str());
    ep_comparison* raw = nullptr;
    const ep_status status = ep_compare(dataset.get(), pointers.data(), pointers.size(),
                                        options.mode.c_str(), &raw);
    if (status != EP_OK) return report_failure(status);
    handle.reset(raw);
    return 0;
}

// Writes to --out when given, stdout otherwise.
int emit(const std::string& text, const Options& options) {
    if (options.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(options.out, std::ios::binary);
    if (!file) {
        std::cerr << "effort-prep: error: cannot write '" << options.out << "'\n";
        return 2;
    }
    file << text;
    return file.good() ? 0 : 1;
}

int run_dataset_info(const Options& options, const std::string& positional) {
    DatasetHandle dataset;
    if (int code = open_dataset(options, positional, dataset)) return code;
    char* text = nullptr;
    const ep_status status = ep_dataset_render(dataset.get(), format_of(options),
                                               options.decimals, color_enabled() ? 1 : 0, &text);
    if (status != EP_OK) return report_failure(status);
    return emit(take_string(text), options);
}

int run_estimate(const Options& options, double size) {
    double a = 0.0, b = 0.0;
    ep_status status = ep_model_parse(options.mode.c_str(), &a, &b);
    if (status != EP_OK) return report_failure(status);
    double effort = 0.0;
    status = ep_estimate(a, b, size, &effort);
    if (status != EP_OK) return report_failure(status);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", options.decimals,
                  effort); // rounded again below for half-away behavior
    // ep values are printed through the library renderers elsewhere; a single
    // scalar goes through the same rounding rule here.
    (void)buffer;
    // Round half away from zero at the configured decimals.
    long double scale = 1.0L;
    for (int i = 0; i < options.decimals; ++i) scale *= 10.0L;
    const long long units = static_cast<long long>(
        std::floor(static_cast<long double>(effort) * scale + 0.5L));
    std::string text = std::to_string(units / static_cast<long long>(scale));
    if (options.decimals > 0) {
        std::string frac = std::to_string(units % static_cast<long long>(scale));
        text += '.';
        text.append(static_cast<size_t>(options.decimals) - frac.size(), '0');
        text += frac;
    }
    std::cout << text << "\n";
    return 0;
}

int run_compare(const Options& options) {
    DatasetHandle dataset;
    if (int code = open_dataset(options, "", dataset)) return code;
    ComparisonHandle comparison;
    if (int code = build_comparison(options, dataset, comparison)) return code;
    char* text = nullptr;
    const ep_status status = ep_comparison_render(comparison.get(), format_of(options),
                                                  options.decimals, color_enabled() ? 1 : 0, &text);
    if (status != EP_OK) return report_failure(status);
    return emit(take_string(text), options);
}

int run_metrics(const Options& options) {
    DatasetHandle dataset;
    if (int code = open_dataset(options, "", dataset)) return code;
    ComparisonHandle comparison;
    if (int code = build_comparison(options, dataset, comparison)) return code;
    const size_t technique_count = ep_comparison_technique_count(comparison.get());
    std::string combined;
    for (size_t i = 0; i < technique_count; ++i) {
        ep_report* raw = nullptr;
        ep_status status = ep_evaluate(comparison.get(), i, options.threshold, &raw);
        if (status != EP_OK) return report_failure(status);
        ReportHandle report(raw);
        char* text = nullptr;
        status = ep_report_render(report.get(), format_of(options), options.decimals,
                                  color_enabled() ? 1 : 0, &text);
        if (status != EP_OK) return report_failure(status);
        if (i > 0) combined += "\n";
        combined += take_string(text);
        if (ep_report_unit_warning(report.get()) != 0) {
            std::cerr << "effort-prep: warning: technique '"
                      << ep_comparison_technique(comparison.get(), i)
                      << "' produces estimates in transformed units; comparing them against "
                         "person-month actuals is not unit-consistent\n";
        }
    }
    return emit(combined, options);
}

int run_calibrate(const Options& options) {
    DatasetHandle dataset;
    if (int code = open_dataset(options, "", dataset)) return code;
    ep_calibration calibration{};
    ep_status status = ep_calibrate(dataset.get(), &calibration);
    if (status != EP_OK) return report_failure(status);
    char* text = nullptr;
    status = ep_calibration_render(&calibration, format_of(options), options.decimals,
                                   color_enabled() ? 1 : 0, &text);
    if (status != EP_OK) return report_failure(status);
    return emit(take_string(text), options);
}

int run_plot(const Options& options) {
    DatasetHandle dataset;
    if (int code = open_dataset(options, "", dataset)) return code;
    ComparisonHandle comparison;
    if (int code = build_comparison(options, dataset, comparison)) return code;
    const std::filesystem::path directory = options.out.empty() ? "." : options.out;
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        std::cerr << "effort-prep: error: cannot create '" << directory.string() << "': "
                  << ec.message() << "\n";
        return 2;
    }
    const size_t technique_count = ep_comparison_technique_count(comparison.get());
    for (size_t i = 0; i < technique_count; ++i) {
        const std::string label = ep_comparison_file_label(comparison.get(), i);
        for (const bool svg : {true, false}) {
            char* text = nullptr;
            const ep_status status =
                svg ? ep_chart_svg(comparison.get(), i, options.decimals, &text)
                    : ep_chart_csv(comparison.get(), i, options.decimals, &text);
            if (status != EP_OK) return report_failure(status);
            const std::filesystem::path path =
                directory / ("effort_" + label + (svg ? ".svg" : ".csv"));
            std::ofstream file(path, std::ios::binary);
            if (!file) {
                ep_string_free(text);
                std::cerr << "effort-prep: error: cannot write '" << path.string() << "'\n";
                return 2;
            }
            file << take_string(text);
            if (!file.good()) return 1;
            std::cout << "wrote " << path.string() << "\n";
        }
    }
    return 0;
}

void add_dataset_flags(CLI::App* cmd, Options& options) {
    auto* builtin = cmd->add_flag("--builtin", options.builtin, "use the bundled IVR dataset");
    cmd->add_option("--input", options.input, "CSV file to load")->excludes(builtin);
}

void add_output_flags(CLI::App* cmd, Options& options) {
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--decimals", options.decimals, "presentation rounding decimals")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    cmd->add_option("--out", options.out, "write output to this path instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    Options options;
    std::string info_path;
    double estimate_size = 0.0;

    CLI::App app{"software effort estimation toolkit (COCOMO basic model with size "
                 "preprocessing, accuracy metrics, calibration and charts)"};
    app.set_version_flag("--version", ep_version());
    app.require_subcommand(1);

    auto* dataset_cmd = app.add_subcommand("dataset", "dataset inspection");
    dataset_cmd->require_subcommand(1);
    auto* info_cmd =
        dataset_cmd->add_subcommand("info", "record count and per-column statistics");
    info_cmd->add_option("path", info_path, "CSV file to inspect");
    add_dataset_flags(info_cmd, options);
    add_output_flags(info_cmd, options);

    auto* estimate_cmd = app.add_subcommand("estimate", "estimate effort for one size");
    estimate_cmd->add_option("size", estimate_size, "project size in KLOC")->required();
    estimate_cmd->add_option("--mode", options.mode, "model token")->capture_default_str();
    estimate_cmd->add_option("--decimals", options.decimals, "presentation rounding decimals")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();

    auto* compare_cmd =
        app.add_subcommand("compare", "side-by-side estimates, one column per technique");
    add_dataset_flags(compare_cmd, options);
    compare_cmd->add_option("--techniques", options.techniques, "comma-separated technique tokens")
        ->capture_default_str();
    compare_cmd->add_option("--mode", options.mode, "model token")->capture_default_str();
    add_output_flags(compare_cmd, options);

    auto* metrics_cmd = app.add_subcommand("metrics", "MRE/MMRE/PRED accuracy report");
    add_dataset_flags(metrics_cmd, options);
    metrics_cmd->add_option("--techniques", options.techniques, "comma-separated technique tokens")
        ->capture_default_str();
    metrics_cmd->add_option("--mode", options.mode, "model token")->capture_default_str();
    metrics_cmd->add_option("--threshold", options.threshold, "PRED accuracy threshold")
        ->capture_default_str();
    add_output_flags(metrics_cmd, options);

    auto* calibrate_cmd =
        app.add_subcommand("calibrate", "least-squares fit of (a, b) to a dataset");
    add_dataset_flags(calibrate_cmd, options);
    add_output_flags(calibrate_cmd, options);

    auto* plot_cmd = app.add_subcommand("plot", "emit one SVG chart (plus point CSV) per technique");
    add_dataset_flags(plot_cmd, options);
    plot_cmd->add_option("--techniques", options.techniques, "comma-separated technique tokens")
        ->capture_default_str();
    plot_cmd->add_option("--mode", options.mode, "model token")->capture_default_str();
    plot_cmd->add_option("--decimals", options.decimals, "presentation rounding decimals")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    plot_cmd->add_option("--out", options.out, "output directory (default: current directory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*info_cmd) return run_dataset_info(options, info_path);
    if (*estimate_cmd) return run_estimate(options, estimate_size);
    if (*compare_cmd) return run_compare(options);
    if (*metrics_cmd) return run_metrics(options);
    if (*calibrate_cmd) return run_calibrate(options);
    if (*plot_cmd) return run_plot(options);
    return 2;
}
