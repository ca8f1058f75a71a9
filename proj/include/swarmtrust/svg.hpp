#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace swarmtrust {

/// One curve of a line chart; x runs 1..values.size().
struct ChartSeries {
    std::string label;
    std::vector<double> values;
};

/// Minimal self-contained SVG line chart (inline styles, no external assets).
void write_line_chart(std::ostream& os, const std::string& title, const std::string& x_label,
                      const std::string& y_label, std::span<const ChartSeries> series);

/// Same, to a file. Throws IoError on any write failure.
void write_line_chart_file(const std::filesystem::path& path, const std::string& title,
                           const std::string& x_label, const std::string& y_label,
                           std::span<const ChartSeries> series);

}  // namespace swarmtrust
