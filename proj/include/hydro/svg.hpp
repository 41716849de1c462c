#pragma once

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "hydro/common.hpp"

namespace hydro {

namespace detail {

// Locale-independent fixed-point formatting so plot bytes are reproducible.
inline std::string fmt_fixed(double v, int precision = 2) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    return std::string(buf, std::size_t(ptr - buf));
}

inline std::string fmt_general(double v) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
    return std::string(buf, std::size_t(ptr - buf));
}

}  // namespace detail

/**
 * Renders a static SVG 1.1 line chart: one polyline per series over the
 * sample index, linear axes with ticks, and a legend. Output bytes are a
 * pure function of the inputs.
 */
inline std::string render_plot_svg(const std::vector<std::vector<double>>& series,
                                   const std::vector<std::string>& labels) {
    if (series.empty()) throw std::invalid_argument("render_plot_svg: no series");
    for (const auto& s : series) {
        if (s.empty()) throw std::invalid_argument("render_plot_svg: empty series");
        if (!all_finite(s)) throw std::invalid_argument("render_plot_svg: non-finite value");
    }
    if (!labels.empty() && labels.size() != series.size()) {
        throw std::invalid_argument("render_plot_svg: label count mismatch");
    }

    static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                     "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    constexpr double kWidth = 960, kHeight = 540;
    constexpr double kLeft = 70, kRight = 790, kTop = 30, kBottom = 500;

    std::size_t max_len = 0;
    double y_min = series[0][0], y_max = series[0][0];
    for (const auto& s : series) {
        max_len = std::max(max_len, s.size());
        for (double v : s) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (y_min == y_max) {  // flat data still needs a drawable range
        y_min -= 1.0;
        y_max += 1.0;
    }
    const double x_max = double(max_len > 1 ? max_len - 1 : 1);

    const auto x_of = [&](double i) { return kLeft + (kRight - kLeft) * (i / x_max); };
    const auto y_of = [&](double v) {
        return kBottom - (kBottom - kTop) * ((v - y_min) / (y_max - y_min));
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::fmt_fixed(kWidth, 0) + "\" height=\"" + detail::fmt_fixed(kHeight, 0) +
           "\" viewBox=\"0 0 960 540\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"540\" fill=\"#ffffff\"/>\n";

    // axes
    svg += "<line x1=\"" + detail::fmt_fixed(kLeft) + "\" y1=\"" + detail::fmt_fixed(kTop) +
           "\" x2=\"" + detail::fmt_fixed(kLeft) + "\" y2=\"" + detail::fmt_fixed(kBottom) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + detail::fmt_fixed(kLeft) + "\" y1=\"" + detail::fmt_fixed(kBottom) +
           "\" x2=\"" + detail::fmt_fixed(kRight) + "\" y2=\"" + detail::fmt_fixed(kBottom) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double v = y_min + (y_max - y_min) * double(i) / 4.0;
        const double y = y_of(v);
        svg += "<line x1=\"" + detail::fmt_fixed(kLeft - 4) + "\" y1=\"" +
               detail::fmt_fixed(y) + "\" x2=\"" + detail::fmt_fixed(kRight) + "\" y2=\"" +
               detail::fmt_fixed(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + detail::fmt_fixed(kLeft - 8) + "\" y=\"" +
               detail::fmt_fixed(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
               detail::fmt_general(v) + "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double idx = x_max * double(i) / 5.0;
        const double x = x_of(idx);
        svg += "<line x1=\"" + detail::fmt_fixed(x) + "\" y1=\"" + detail::fmt_fixed(kBottom) +
               "\" x2=\"" + detail::fmt_fixed(x) + "\" y2=\"" + detail::fmt_fixed(kBottom + 4) +
               "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + detail::fmt_fixed(x) + "\" y=\"" +
               detail::fmt_fixed(kBottom + 18) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               detail::fmt_fixed(idx, 0) + "</text>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].size(); ++i) {
            if (i) svg += ' ';
            svg += detail::fmt_fixed(x_of(double(i))) + ',' + detail::fmt_fixed(y_of(series[s][i]));
        }
        svg += "\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double y = kTop + 16.0 * double(s);
        const std::string label =
            labels.empty() ? "series " + std::to_string(s + 1) : labels[s];
        svg += "<line x1=\"805\" y1=\"" + detail::fmt_fixed(y) + "\" x2=\"835\" y2=\"" +
               detail::fmt_fixed(y) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"840\" y=\"" + detail::fmt_fixed(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + label + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

/// Writes the rendered chart to `path`.
inline void emit_plot(const std::vector<std::vector<double>>& series,
                      const std::vector<std::string>& labels, const std::string& path) {
    const std::string svg = render_plot_svg(series, labels);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("emit_plot: cannot open '" + path + "' for writing");
    out << svg;
}

}  // namespace hydro
