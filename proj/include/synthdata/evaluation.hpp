#pragma once

// Fidelity comparison between a reference dataset and a synthetic one:
// correlation matrices side by side, per-column marginal divergences
// (mean/std diffs, KS statistic), shared-bin histograms, and a capped
// deterministic scatter sample for plotting.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "synthdata/correlation.hpp"
#include "synthdata/dataset.hpp"
#include "synthdata/rng.hpp"

namespace synthdata {

inline constexpr std::size_t kHistogramBins = 20;
inline constexpr std::size_t kScatterSampleCap = 1000;
/// Fixed seed for the scatter subsample, so reports are deterministic.
inline constexpr std::uint64_t kScatterSampleSeed = 0x5eedf00d;

/// Supremum distance between the two empirical CDFs, evaluated over every
/// sample point of both sequences. Always in [0,1].
inline double ks_statistic(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) {
        throw EmptyInputError("ks_statistic: both sequences must be nonempty");
    }
    std::vector<double> sa = a;
    std::vector<double> sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    double sup = 0.0;
    std::size_t ia = 0;
    std::size_t ib = 0;
    // Walk the merged sample points; after consuming all copies of a point t,
    // (ia/na, ib/nb) are the two ECDFs evaluated at t.
    while (ia < sa.size() || ib < sb.size()) {
        double t;
        if (ib >= sb.size() || (ia < sa.size() && sa[ia] <= sb[ib])) {
            t = sa[ia];
        } else {
            t = sb[ib];
        }
        while (ia < sa.size() && sa[ia] == t) ++ia;
        while (ib < sb.size() && sb[ib] == t) ++ib;
        sup = std::max(sup, std::abs(static_cast<double>(ia) / na -
                                     static_cast<double>(ib) / nb));
    }
    return sup;
}

struct ColumnComparison {
    std::string name;
    double mean_diff = 0.0;  // synth mean - real mean
    double std_diff = 0.0;   // synth std - real std
    double ks = 0.0;
};

/// Shared-bin histogram for one column: kHistogramBins equal-width bins
/// spanning the union range of both datasets (the top edge is inclusive).
struct HistogramPair {
    std::string name;
    std::vector<double> bin_edges;  // kHistogramBins + 1 edges
    std::vector<std::size_t> real_counts;
    std::vector<std::size_t> synth_counts;
};

struct FidelityReport {
    CorrelationMatrix real_corr;
    CorrelationMatrix synth_corr;
    double corr_max_abs_diff = 0.0;
    std::vector<ColumnComparison> columns;
    std::vector<HistogramPair> histograms;
    Dataset real_scatter_sample;
    Dataset synth_scatter_sample;
};

namespace detail {

inline void check_matching_schemas(const Dataset& real, const Dataset& synth,
                                   const char* what) {
    if (real.column_names() != synth.column_names()) {
        std::string msg = std::string(what) + ": column schemas differ (";
        for (const auto& n : real.column_names()) msg += n + " ";
        msg += "vs ";
        for (const auto& n : synth.column_names()) msg += n + " ";
        msg += ")";
        throw SchemaError(msg);
    }
}

inline std::vector<std::size_t> histogram_counts(const std::vector<double>& values,
                                                 const std::vector<double>& edges) {
    const std::size_t bins = edges.size() - 1;
    std::vector<std::size_t> counts(bins, 0);
    const double lo = edges.front();
    const double hi = edges.back();
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : values) {
        auto bin = static_cast<std::size_t>((v - lo) / width);
        if (bin >= bins) bin = bins - 1;  // top edge inclusive
        ++counts[bin];
    }
    return counts;
}

/// Deterministic sample of at most `cap` row indices, seeded by a fixed
/// constant (partial Fisher-Yates over the index vector).
inline std::vector<std::size_t> sample_rows(std::size_t n, std::size_t cap,
                                            RngStream stream) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (n <= cap) return idx;
    for (std::size_t i = 0; i < cap; ++i) {
        const std::size_t j = i + stream.next_index(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(cap);
    std::sort(idx.begin(), idx.end());
    return idx;
}

inline Dataset take_rows(const Dataset& d, const std::vector<std::size_t>& rows) {
    std::vector<Column> cols;
    cols.reserve(d.n_cols());
    for (const auto& c : d.columns()) {
        std::vector<double> v;
        v.reserve(rows.size());
        for (std::size_t r : rows) v.push_back(c.values[r]);
        cols.push_back(Column{c.name, std::move(v)});
    }
    return Dataset(std::move(cols));
}

}  // namespace detail

/// Builds the full comparison. Requires identical column names in identical
/// order; the scatter sample uses a fixed internal seed (overridable) so the
/// report is deterministic.
inline FidelityReport fidelity_report(const Dataset& real, const Dataset& synth,
                                      std::uint64_t scatter_seed = kScatterSampleSeed) {
    detail::check_matching_schemas(real, synth, "fidelity_report");
    FidelityReport report;
    report.real_corr = correlation_matrix(real);
    report.synth_corr = correlation_matrix(synth);

    const std::size_t k = real.n_cols();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            report.corr_max_abs_diff =
                std::max(report.corr_max_abs_diff,
                         std::abs(report.real_corr.entries(a, b) -
                                  report.synth_corr.entries(a, b)));
        }
    }

    for (std::size_t c = 0; c < k; ++c) {
        const auto& name = real.column(c).name;
        const SummaryStats rs = column_stats(real, name);
        const SummaryStats ss = column_stats(synth, name);
        ColumnComparison cmp;
        cmp.name = name;
        cmp.mean_diff = ss.mean - rs.mean;
        cmp.std_diff = ss.std - rs.std;
        cmp.ks = ks_statistic(real.column(c).values, synth.column(c).values);
        report.columns.push_back(cmp);

        HistogramPair hist;
        hist.name = name;
        double lo = std::min(rs.min, ss.min);
        double hi = std::max(rs.max, ss.max);
        if (lo == hi) {  // degenerate union range: widen symmetrically
            lo -= 0.5;
            hi += 0.5;
        }
        hist.bin_edges.resize(kHistogramBins + 1);
        for (std::size_t i = 0; i <= kHistogramBins; ++i) {
            hist.bin_edges[i] =
                lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kHistogramBins);
        }
        hist.real_counts = detail::histogram_counts(real.column(c).values, hist.bin_edges);
        hist.synth_counts = detail::histogram_counts(synth.column(c).values, hist.bin_edges);
        report.histograms.push_back(std::move(hist));
    }

    report.real_scatter_sample = detail::take_rows(
        real, detail::sample_rows(real.n_rows(), kScatterSampleCap, RngStream(scatter_seed, 0)));
    report.synth_scatter_sample = detail::take_rows(
        synth,
        detail::sample_rows(synth.n_rows(), kScatterSampleCap, RngStream(scatter_seed, 1)));
    return report;
}

namespace detail {

inline nlohmann::json corr_to_json(const CorrelationMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.entries.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.entries.cols(); ++j) row.push_back(m.entries(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"labels", m.labels}, {"entries", rows}};
}

}  // namespace detail

/// Machine-readable report document (JSON). Scatter samples are summarized by
/// row counts only; the full samples live in the SVG artifacts.
inline std::string fidelity_report_json(const FidelityReport& report) {
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& c : report.columns) {
        columns.push_back({{"name", c.name},
                           {"mean_diff", c.mean_diff},
                           {"std_diff", c.std_diff},
                           {"ks", c.ks}});
    }
    nlohmann::json histograms = nlohmann::json::array();
    for (const auto& h : report.histograms) {
        histograms.push_back({{"name", h.name},
                              {"bin_edges", h.bin_edges},
                              {"real_counts", h.real_counts},
                              {"synth_counts", h.synth_counts}});
    }
    const nlohmann::json doc{
        {"real_corr", detail::corr_to_json(report.real_corr)},
        {"synth_corr", detail::corr_to_json(report.synth_corr)},
        {"corr_max_abs_diff", report.corr_max_abs_diff},
        {"columns", columns},
        {"histograms", histograms},
        {"scatter_sample_rows",
         {{"real", report.real_scatter_sample.n_rows()},
          {"synth", report.synth_scatter_sample.n_rows()}}},
    };
    return doc.dump(2) + "\n";
}

}  // namespace synthdata
