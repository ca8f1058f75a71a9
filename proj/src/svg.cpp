#include "swarmtrust/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "swarmtrust/errors.hpp"

namespace swarmtrust {

namespace {

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

void write_line_chart(std::ostream& os, const std::string& title, const std::string& x_label,
                      const std::string& y_label, std::span<const ChartSeries> series) {
    constexpr double width = 760, height = 480;
    constexpr double left = 70, right = 180, top = 50, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    std::size_t points = 0;
    double y_max = 0.0;
    for (const auto& s : series) {
        points = std::max(points, s.values.size());
        for (const double v : s.values) y_max = std::max(y_max, v);
    }
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;
    const double x_max = points > 0 ? static_cast<double>(points) : 1.0;

    auto px = [&](double x) { return left + (x - 1.0) / std::max(x_max - 1.0, 1.0) * plot_w; };
    auto py = [&](double y) { return top + plot_h - y / y_max * plot_h; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
          "font-size=\"15\">" << title << "</text>\n";

    // axes
    os << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
       << "\" y2=\"" << num(top + plot_h) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + plot_h) << "\" x2=\""
       << num(left + plot_w) << "\" y2=\"" << num(top + plot_h) << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double y = y_max * i / 5.0;
        os << "<line x1=\"" << num(left - 4) << "\" y1=\"" << num(py(y)) << "\" x2=\""
           << num(left + plot_w) << "\" y2=\"" << num(py(y))
           << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        os << "<text x=\"" << num(left - 8) << "\" y=\"" << num(py(y) + 4)
           << "\" text-anchor=\"end\">" << tick_label(y) << "</text>\n";
    }
    const int x_step = points > 10 ? static_cast<int>(points) / 5 : 1;
    for (std::size_t i = 1; i <= points; i += static_cast<std::size_t>(x_step)) {
        const double x = static_cast<double>(i);
        os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(top + plot_h + 16)
           << "\" text-anchor=\"middle\">" << i << "</text>\n";
    }
    os << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(height - 12)
       << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << num(top + plot_h / 2)
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << num(top + plot_h / 2) << ")\">"
       << y_label << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % std::size(kPalette)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i > 0) os << ' ';
            os << num(px(static_cast<double>(i + 1))) << ',' << num(py(s.values[i]));
        }
        os << "\"/>\n";
        const double ly = top + 10 + 18 * static_cast<double>(si);
        os << "<line x1=\"" << num(width - right + 10) << "\" y1=\"" << num(ly) << "\" x2=\""
           << num(width - right + 34) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << num(width - right + 40) << "\" y=\"" << num(ly + 4) << "\">"
           << s.label << "</text>\n";
    }
    os << "</svg>\n";
}

void write_line_chart_file(const std::filesystem::path& path, const std::string& title,
                           const std::string& x_label, const std::string& y_label,
                           std::span<const ChartSeries> series) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    write_line_chart(os, title, x_label, y_label, series);
    os.flush();
    if (!os) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace swarmtrust
