#include "chart.hpp"

#include "error.hpp"
#include "format.hpp"

#include <algorithm>
#include <cmath>

namespace effortprep {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 56.0;

std::string num(double value) { return format_fixed(value, 2); }

// Smallest 1/2/5 x 10^k step that keeps the axis at six ticks or fewer.
double nice_step(double max_value) {
    const double raw = max_value / 5.0;
    double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (magnitude * mult >= raw) return magnitude * mult;
    }
    return magnitude * 10.0;
}

std::string text_element(double x, double y, const std::string& anchor,
                         const std::string& content) {
    return "  <text x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" + anchor + "\">" +
           content + "</text>\n";
}

} // namespace

std::string chart_svg(const TechniqueColumn& column, const std::string& dataset_name,
                      int decimals) {
    const std::vector<EstimationRow>& rows = column.rows;
    if (rows.empty()) {
        fail(ErrorKind::InvalidArgument, "cannot chart an empty technique column");
    }
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    double max_value = 0.0;
    for (const EstimationRow& row : rows) max_value = std::max(max_value, row.estimated_effort);
    if (max_value <= 0.0) max_value = 1.0;
    const double step = nice_step(max_value);
    const double y_top = std::ceil(max_value / step - 1e-9) * step;

    const std::size_t n = rows.size();
    auto x_at = [&](std::size_t i) {
        if (n == 1) return kMarginLeft + plot_w / 2.0;
        return kMarginLeft + plot_w * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto y_at = [&](double value) { return kMarginTop + plot_h * (1.0 - value / y_top); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"#ffffff\"/>\n";
    svg += text_element(kWidth / 2.0, 24.0, "middle",
                        dataset_name + ": estimated effort (" + column.spec.token() + ")");

    // Horizontal grid lines and y tick labels.
    for (double tick = 0.0; tick <= y_top + step / 2.0; tick += step) {
        const double y = y_at(tick);
        svg += "  <line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kWidth - kMarginRight) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += text_element(kMarginLeft - 8.0, y + 4.0, "end", format_shortest(tick));
    }

    // X tick labels (1-based project index), thinned to at most 13 labels.
    const std::size_t stride = std::max<std::size_t>(1, (n + 11) / 12);
    for (std::size_t i = 0; i < n; i += stride) {
        svg += text_element(x_at(i), kHeight - kMarginBottom + 18.0, "middle",
                            std::to_string(i + 1));
    }

    // Axes.
    svg += "  <line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) + "\" x2=\"" +
           num(kMarginLeft) + "\" y2=\"" + num(kHeight - kMarginBottom) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "  <line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kHeight - kMarginBottom) +
           "\" x2=\"" + num(kWidth - kMarginRight) + "\" y2=\"" + num(kHeight - kMarginBottom) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += text_element(kWidth / 2.0, kHeight - 12.0, "middle", "project");
    svg += "  <text x=\"18\" y=\"" + num(kMarginTop + plot_h / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           num(kMarginTop + plot_h / 2.0) + ")\">estimated effort</text>\n";

    if (n > 1) {
        std::string points;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) points += ' ';
            points += num(x_at(i)) + "," + num(y_at(rows[i].estimated_effort));
        }
        svg += "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" +
               points + "\"/>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        svg += "  <circle cx=\"" + num(x_at(i)) + "\" cy=\"" + num(y_at(rows[i].estimated_effort)) +
               "\" r=\"3\" fill=\"#1f77b4\" data-project=\"" + std::to_string(rows[i].project_id) +
               "\" data-value=\"" + format_fixed(rows[i].estimated_effort, decimals) + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string chart_points_csv(const TechniqueColumn& column, int decimals) {
    std::string out = "project_id,estimated_effort\n";
    for (const EstimationRow& row : column.rows) {
        out += std::to_string(row.project_id) + "," +
               format_fixed(row.estimated_effort, decimals) + "\n";
    }
    return out;
}

} // namespace effortprep
