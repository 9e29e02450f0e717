#pragma once

// Covariance/correlation machinery over Datasets: sample covariance (n-1
// denominator), Pearson correlation, and Spearman rank correlation with
// average ranks for ties.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "synthdata/dataset.hpp"
#include "synthdata/matrix.hpp"

namespace synthdata {

/// Square labeled matrix. When produced by correlation_matrix or
/// spearman_matrix it is symmetric with a unit diagonal and entries in
/// [-1, 1]; the open struct also carries derived artifacts such as
/// entrywise correlation differences.
struct CorrelationMatrix {
    std::vector<std::string> labels;
    Matrix entries;
};

namespace detail {

inline std::vector<double> column_means(const Dataset& d) {
    std::vector<double> means(d.n_cols());
    for (std::size_t c = 0; c < d.n_cols(); ++c) {
        const auto& v = d.column(c).values;
        means[c] = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    }
    return means;
}

/// Average ranks, 1-based; ties share the mean of the positions they span.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace detail

/// Sample covariance matrix with the n-1 denominator.
inline Matrix covariance_matrix(const Dataset& d) {
    const std::size_t n = d.n_rows();
    if (n < 2) {
        throw InsufficientDataError("covariance_matrix: need at least 2 rows, got " +
                                    std::to_string(n));
    }
    const std::size_t k = d.n_cols();
    const auto means = detail::column_means(d);
    Matrix cov(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            const auto& xs = d.column(a).values;
            const auto& ys = d.column(b).values;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += (xs[i] - means[a]) * (ys[i] - means[b]);
            }
            const double v = acc / static_cast<double>(n - 1);
            cov(a, b) = v;
            cov(b, a) = v;
        }
    }
    return cov;
}

/// Pearson correlation matrix. Constant columns have no defined correlation
/// and raise a DegenerateColumnError naming the column.
inline CorrelationMatrix correlation_matrix(const Dataset& d) {
    const Matrix cov = covariance_matrix(d);
    const std::size_t k = d.n_cols();
    std::vector<double> sd(k);
    for (std::size_t c = 0; c < k; ++c) {
        sd[c] = std::sqrt(cov(c, c));
        if (!(sd[c] > 0.0)) {
            throw DegenerateColumnError("correlation_matrix: column \"" + d.column(c).name +
                                        "\" is constant");
        }
    }
    CorrelationMatrix corr{d.column_names(), Matrix(k, k)};
    for (std::size_t a = 0; a < k; ++a) {
        corr.entries(a, a) = 1.0;
        for (std::size_t b = a + 1; b < k; ++b) {
            const double v = cov(a, b) / (sd[a] * sd[b]);
            corr.entries(a, b) = v;
            corr.entries(b, a) = v;
        }
    }
    return corr;
}

/// Spearman rank correlation: Pearson correlation of average-ranked columns.
inline CorrelationMatrix spearman_matrix(const Dataset& d) {
    if (d.n_rows() < 2) {
        throw InsufficientDataError("spearman_matrix: need at least 2 rows, got " +
                                    std::to_string(d.n_rows()));
    }
    std::vector<Column> ranked;
    ranked.reserve(d.n_cols());
    for (const auto& c : d.columns()) {
        ranked.push_back(Column{c.name, detail::average_ranks(c.values)});
    }
    return correlation_matrix(Dataset(std::move(ranked)));
}

}  // namespace synthdata
