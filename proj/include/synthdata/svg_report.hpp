#pragma once

// SVG renderers for the report artifacts: an annotated correlation heatmap
// and a real-vs-synthetic pair plot (histograms on the diagonal, scatter
// off-diagonal). Output is plain SVG 1.1 markup built with fixed-precision
// formatting, so identical inputs produce identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "synthdata/correlation.hpp"
#include "synthdata/dataset.hpp"
#include "synthdata/evaluation.hpp"

namespace synthdata {

namespace detail {

inline void svg_append(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    const int len = std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    out.append(buf, static_cast<std::size_t>(std::min(len, static_cast<int>(sizeof(buf) - 1))));
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

/// Diverging blue-white-red scale anchored at -1 / 0 / +1.
inline std::string diverging_color(double v) {
    v = std::clamp(v, -1.0, 1.0);
    int r, g, b;
    if (v >= 0.0) {
        r = static_cast<int>(std::lround(255 + (178 - 255) * v));
        g = static_cast<int>(std::lround(255 + (24 - 255) * v));
        b = static_cast<int>(std::lround(255 + (43 - 255) * v));
    } else {
        r = static_cast<int>(std::lround(255 + (33 - 255) * -v));
        g = static_cast<int>(std::lround(255 + (102 - 255) * -v));
        b = static_cast<int>(std::lround(255 + (172 - 255) * -v));
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace detail

/// Annotated heatmap of a labeled square matrix. Cells carry the value to two
/// decimals; the fill is the diverging scale anchored at -1/0/+1.
inline std::string render_heatmap(const CorrelationMatrix& m) {
    const std::size_t k = m.entries.rows();
    if (k != m.entries.cols() || m.labels.size() != k) {
        throw ShapeError("render_heatmap: need a square matrix with one label per row");
    }
    const double cell = 88.0;
    const double left = 150.0;
    const double top = 120.0;
    const double width = left + cell * static_cast<double>(k) + 20.0;
    const double height = top + cell * static_cast<double>(k) + 20.0;

    std::string svg;
    detail::svg_append(svg,
                       "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                       "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                       width, height, width, height);
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t j = 0; j < k; ++j) {
        const double cx = left + (static_cast<double>(j) + 0.5) * cell;
        detail::svg_append(svg,
                           "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                           "font-size=\"13\" text-anchor=\"start\" "
                           "transform=\"rotate(-45 %.1f %.1f)\">%s</text>\n",
                           cx, top - 10.0, cx, top - 10.0,
                           detail::xml_escape(m.labels[j]).c_str());
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double cy = top + (static_cast<double>(i) + 0.5) * cell;
        detail::svg_append(svg,
                           "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                           "font-size=\"13\" text-anchor=\"end\" dy=\"4\">%s</text>\n",
                           left - 10.0, cy, detail::xml_escape(m.labels[i]).c_str());
    }

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double v = m.entries(i, j);
            const double x = left + static_cast<double>(j) * cell;
            const double y = top + static_cast<double>(i) * cell;
            detail::svg_append(svg,
                               "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                               "fill=\"%s\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
                               x, y, cell, cell, detail::diverging_color(v).c_str());
            const char* text_color = std::abs(v) > 0.6 ? "white" : "black";
            detail::svg_append(svg,
                               "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                               "font-size=\"16\" text-anchor=\"middle\" dy=\"5\" "
                               "fill=\"%s\">%.2f</text>\n",
                               x + cell / 2.0, y + cell / 2.0, text_color, v);
        }
    }
    svg += "</svg>\n";
    return svg;
}

/// Pair plot: k x k grid with overlaid real/synthetic histograms on the
/// diagonal and overlaid scatter panels off the diagonal. Schemas must match
/// and k is capped at 8 columns. Scatter panels use the same deterministic
/// capped subsample as fidelity_report.
inline std::string render_pairplot(const Dataset& real, const Dataset& synth) {
    detail::check_matching_schemas(real, synth, "render_pairplot");
    const std::size_t k = real.n_cols();
    if (k == 0) throw DomainError("render_pairplot: no columns to plot");
    if (k > 8) {
        throw DomainError("render_pairplot: at most 8 columns supported, got " +
                          std::to_string(k));
    }

    const Dataset real_pts = detail::take_rows(
        real,
        detail::sample_rows(real.n_rows(), kScatterSampleCap, RngStream(kScatterSampleSeed, 0)));
    const Dataset synth_pts = detail::take_rows(
        synth,
        detail::sample_rows(synth.n_rows(), kScatterSampleCap, RngStream(kScatterSampleSeed, 1)));

    // Per-column union ranges over the full datasets.
    std::vector<double> lo(k), hi(k);
    for (std::size_t c = 0; c < k; ++c) {
        lo[c] = 0.0;
        hi[c] = 1.0;
        const auto& rv = real.column(c).values;
        const auto& sv = synth.column(c).values;
        if (!rv.empty()) {
            lo[c] = std::min(*std::min_element(rv.begin(), rv.end()),
                             *std::min_element(sv.begin(), sv.end()));
            hi[c] = std::max(*std::max_element(rv.begin(), rv.end()),
                             *std::max_element(sv.begin(), sv.end()));
        }
        if (lo[c] == hi[c]) {
            lo[c] -= 0.5;
            hi[c] += 0.5;
        }
    }

    const double panel = 170.0;
    const double gap = 14.0;
    const double left = 60.0;
    const double top = 50.0;
    const double width = left + static_cast<double>(k) * (panel + gap) + 20.0;
    const double height = top + static_cast<double>(k) * (panel + gap) + 20.0;
    const char* real_color = "#4878a8";
    const char* synth_color = "#e08214";

    std::string svg;
    detail::svg_append(svg,
                       "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                       "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                       width, height, width, height);
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    detail::svg_append(svg,
                       "<rect x=\"%.1f\" y=\"14\" width=\"12\" height=\"12\" fill=\"%s\" "
                       "fill-opacity=\"0.6\"/>\n",
                       left, real_color);
    detail::svg_append(svg,
                       "<text x=\"%.1f\" y=\"25\" font-family=\"sans-serif\" "
                       "font-size=\"13\">real</text>\n",
                       left + 18.0);
    detail::svg_append(svg,
                       "<rect x=\"%.1f\" y=\"14\" width=\"12\" height=\"12\" fill=\"%s\" "
                       "fill-opacity=\"0.6\"/>\n",
                       left + 80.0, synth_color);
    detail::svg_append(svg,
                       "<text x=\"%.1f\" y=\"25\" font-family=\"sans-serif\" "
                       "font-size=\"13\">synthetic</text>\n",
                       left + 98.0);

    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t col = 0; col < k; ++col) {
            const double px = left + static_cast<double>(col) * (panel + gap);
            const double py = top + static_cast<double>(row) * (panel + gap);
            detail::svg_append(svg,
                               "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                               "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
                               px, py, panel, panel);
            if (row == col) {
                // Overlaid histograms on shared bins.
                std::vector<double> edges(kHistogramBins + 1);
                for (std::size_t i = 0; i <= kHistogramBins; ++i) {
                    edges[i] = lo[col] + (hi[col] - lo[col]) * static_cast<double>(i) /
                                             static_cast<double>(kHistogramBins);
                }
                const auto rc = detail::histogram_counts(real.column(col).values, edges);
                const auto sc = detail::histogram_counts(synth.column(col).values, edges);
                std::size_t peak = 1;
                for (std::size_t i = 0; i < kHistogramBins; ++i) {
                    peak = std::max({peak, rc[i], sc[i]});
                }
                const double bar_w = panel / static_cast<double>(kHistogramBins);
                for (std::size_t i = 0; i < kHistogramBins; ++i) {
                    const double rh = panel * static_cast<double>(rc[i]) /
                                      static_cast<double>(peak);
                    const double sh = panel * static_cast<double>(sc[i]) /
                                      static_cast<double>(peak);
                    if (rc[i] > 0) {
                        detail::svg_append(svg,
                                           "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
                                           "height=\"%.2f\" fill=\"%s\" fill-opacity=\"0.55\"/>\n",
                                           px + static_cast<double>(i) * bar_w, py + panel - rh,
                                           bar_w, rh, real_color);
                    }
                    if (sc[i] > 0) {
                        detail::svg_append(svg,
                                           "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
                                           "height=\"%.2f\" fill=\"%s\" fill-opacity=\"0.55\"/>\n",
                                           px + static_cast<double>(i) * bar_w, py + panel - sh,
                                           bar_w, sh, synth_color);
                    }
                }
                detail::svg_append(svg,
                                   "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                                   "font-size=\"13\" text-anchor=\"middle\">%s</text>\n",
                                   px + panel / 2.0, py - 4.0,
                                   detail::xml_escape(real.column(col).name).c_str());
            } else {
                auto plot_points = [&](const Dataset& pts, const char* color) {
                    const auto& xs = pts.column(col).values;
                    const auto& ys = pts.column(row).values;
                    for (std::size_t i = 0; i < xs.size(); ++i) {
                        const double x =
                            px + panel * (xs[i] - lo[col]) / (hi[col] - lo[col]);
                        const double y =
                            py + panel - panel * (ys[i] - lo[row]) / (hi[row] - lo[row]);
                        detail::svg_append(svg,
                                           "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1.8\" "
                                           "fill=\"%s\" fill-opacity=\"0.45\"/>\n",
                                           x, y, color);
                    }
                };
                plot_points(real_pts, real_color);
                plot_points(synth_pts, synth_color);
            }
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace synthdata
