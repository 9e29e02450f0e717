#pragma once

// The statistical generators: correlated multivariate normal, bootstrap
// resampling with additive Gaussian noise, and a Gaussian copula with beta
// marginals. Each is a pure function of (config, source, seed); draw order is
// fixed and documented so outputs are reproducible bit-for-bit.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synthdata/correlation.hpp"
#include "synthdata/dataset.hpp"
#include "synthdata/matrix.hpp"
#include "synthdata/rng.hpp"
#include "synthdata/special.hpp"

namespace synthdata {

namespace detail {

inline void check_corr_shape(const CorrelationMatrix& corr, std::size_t k,
                             const char* what) {
    if (corr.entries.rows() != k || corr.entries.cols() != k) {
        throw ShapeError(std::string(what) + ": correlation matrix is " +
                         std::to_string(corr.entries.rows()) + "x" +
                         std::to_string(corr.entries.cols()) + ", expected " +
                         std::to_string(k) + "x" + std::to_string(k));
    }
}

/// Factor a correlation target, optionally retrying once with `eps` added to
/// the diagonal when the caller opted into jitter repair.
inline LowerTriangular factor_correlation(const Matrix& corr, bool jitter_repair,
                                          double jitter_eps) {
    if (!jitter_repair) return cholesky(corr);
    try {
        return cholesky(corr);
    } catch (const FactorizationError&) {
        Matrix repaired = corr;
        for (std::size_t i = 0; i < repaired.rows(); ++i) {
            repaired(i, i) += jitter_eps;
        }
        return cholesky(repaired);
    }
}

}  // namespace detail

// ---- Multivariate normal -------------------------------------------------

struct MultivariateConfig {
    std::vector<std::string> labels;
    std::vector<double> means;
    std::vector<double> stds;
    CorrelationMatrix target_corr;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool jitter_repair = false;
    double jitter_eps = 1e-8;
};

/// Correlated normal columns: row r of column j is
///   mean_j + std_j * (L z_r)_j,  L = cholesky(target_corr), z_r iid N(0,1).
/// Draws are row-major: row r consumes draws r*k .. r*k+k-1 of the stream.
inline Dataset gen_multivariate(const MultivariateConfig& cfg) {
    const std::size_t k = cfg.labels.size();
    if (k == 0) throw DomainError("gen_multivariate: no columns configured");
    if (cfg.means.size() != k || cfg.stds.size() != k) {
        throw ShapeError("gen_multivariate: labels/means/stds lengths disagree");
    }
    if (cfg.n < 1) throw DomainError("gen_multivariate: n must be >= 1");
    for (std::size_t j = 0; j < k; ++j) {
        if (!(cfg.stds[j] > 0.0)) {
            throw DomainError("gen_multivariate: std for \"" + cfg.labels[j] +
                              "\" must be positive");
        }
    }
    detail::check_corr_shape(cfg.target_corr, k, "gen_multivariate");
    const LowerTriangular l =
        detail::factor_correlation(cfg.target_corr.entries, cfg.jitter_repair, cfg.jitter_eps);

    std::vector<Column> cols;
    cols.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        cols.push_back(Column{cfg.labels[j], std::vector<double>(cfg.n)});
    }
    RngStream stream(cfg.seed);
    std::vector<double> z(k);
    for (std::size_t r = 0; r < cfg.n; ++r) {
        for (std::size_t j = 0; j < k; ++j) z[j] = stream.next_standard_normal();
        const std::vector<double> correlated = l.apply(z);
        for (std::size_t j = 0; j < k; ++j) {
            cols[j].values[r] = cfg.means[j] + cfg.stds[j] * correlated[j];
        }
    }
    return Dataset(std::move(cols));
}

// ---- Bootstrap -------------------------------------------------------------

/// Additive noise scale: either one absolute sigma for every column, or a
/// fraction of each column's sample standard deviation.
struct NoiseSigma {
    enum class Kind { absolute, fraction_of_std };
    Kind kind = Kind::fraction_of_std;
    double value = 0.05;

    static NoiseSigma absolute(double sigma) { return {Kind::absolute, sigma}; }
    static NoiseSigma fraction_of_std(double f) { return {Kind::fraction_of_std, f}; }
};

enum class BootstrapMode { joint, independent };

struct BootstrapConfig {
    std::size_t n_out = 0;
    NoiseSigma noise;  // defaults to 0.05 x column std
    // `independent` resamples each column on its own index sequence and
    // destroys cross-column structure; `joint` copies whole rows and keeps it.
    BootstrapMode mode = BootstrapMode::independent;
    std::uint64_t seed = 0;
};

/// Resample-with-replacement plus cellwise Gaussian noise. Joint mode draws
/// one row index then k noises per output row; independent mode walks column
/// by column drawing (index, noise) per cell.
inline Dataset gen_bootstrap(const Dataset& source, const BootstrapConfig& cfg) {
    if (source.n_rows() == 0 || source.n_cols() == 0) {
        throw EmptyInputError("gen_bootstrap: source dataset is empty");
    }
    if (cfg.n_out < 1) throw DomainError("gen_bootstrap: n_out must be >= 1");
    if (cfg.noise.value < 0.0) {
        throw DomainError("gen_bootstrap: noise sigma must be nonnegative");
    }
    const std::size_t k = source.n_cols();
    const std::size_t n_in = source.n_rows();

    std::vector<double> sigma(k, cfg.noise.value);
    if (cfg.noise.kind == NoiseSigma::Kind::fraction_of_std && cfg.noise.value > 0.0) {
        for (std::size_t c = 0; c < k; ++c) {
            sigma[c] = cfg.noise.value * column_stats(source, source.column(c).name).std;
        }
    }

    std::vector<Column> cols;
    cols.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        cols.push_back(Column{source.column(c).name, std::vector<double>(cfg.n_out)});
    }
    RngStream stream(cfg.seed);
    if (cfg.mode == BootstrapMode::joint) {
        for (std::size_t r = 0; r < cfg.n_out; ++r) {
            const std::size_t pick = stream.next_index(n_in);
            for (std::size_t c = 0; c < k; ++c) {
                cols[c].values[r] =
                    source.column(c).values[pick] + sigma[c] * stream.next_standard_normal();
            }
        }
    } else {
        for (std::size_t c = 0; c < k; ++c) {
            const auto& src = source.column(c).values;
            for (std::size_t r = 0; r < cfg.n_out; ++r) {
                const std::size_t pick = stream.next_index(n_in);
                cols[c].values[r] = src[pick] + sigma[c] * stream.next_standard_normal();
            }
        }
    }
    return Dataset(std::move(cols));
}

// ---- Gaussian copula with beta marginals -----------------------------------

struct BetaMarginal {
    double alpha = 2.0;
    double beta = 2.0;
};

struct CopulaConfig {
    std::vector<std::string> labels;
    CorrelationMatrix latent_corr;
    std::vector<BetaMarginal> marginals;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    bool jitter_repair = false;
    double jitter_eps = 1e-8;
};

/// Labeled correlation matrix helper for the common 3x3 case.
inline CorrelationMatrix make_correlation(std::vector<std::string> labels,
                                          const std::vector<std::vector<double>>& rows) {
    const std::size_t k = labels.size();
    Matrix m(k, k);
    if (rows.size() != k) {
        throw ShapeError("make_correlation: need " + std::to_string(k) + " rows");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != k) {
            throw ShapeError("make_correlation: row " + std::to_string(i) +
                             " has wrong length");
        }
        for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[i][j];
    }
    return CorrelationMatrix{std::move(labels), std::move(m)};
}

/// Gaussian copula: latent correlated normals X via cholesky(latent_corr),
/// U = Phi(X) entrywise, then Y_i = beta_quantile(U_i, alpha_i, beta_i).
/// Every output cell lies in [0,1]. Draw order matches gen_multivariate.
inline Dataset gen_copula(const CopulaConfig& cfg) {
    const std::size_t k = cfg.labels.size();
    if (k == 0) throw DomainError("gen_copula: no columns configured");
    if (cfg.marginals.size() != k) {
        throw ShapeError("gen_copula: need one (alpha, beta) pair per column");
    }
    if (cfg.n < 1) throw DomainError("gen_copula: n must be >= 1");
    for (std::size_t j = 0; j < k; ++j) {
        if (!(cfg.marginals[j].alpha > 0.0) || !(cfg.marginals[j].beta > 0.0)) {
            throw DomainError("gen_copula: marginal parameters for \"" + cfg.labels[j] +
                              "\" must be positive");
        }
    }
    detail::check_corr_shape(cfg.latent_corr, k, "gen_copula");
    const LowerTriangular l =
        detail::factor_correlation(cfg.latent_corr.entries, cfg.jitter_repair, cfg.jitter_eps);

    std::vector<Column> cols;
    cols.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        cols.push_back(Column{cfg.labels[j], std::vector<double>(cfg.n)});
    }
    RngStream stream(cfg.seed);
    std::vector<double> z(k);
    for (std::size_t r = 0; r < cfg.n; ++r) {
        for (std::size_t j = 0; j < k; ++j) z[j] = stream.next_standard_normal();
        const std::vector<double> latent = l.apply(z);
        for (std::size_t j = 0; j < k; ++j) {
            const double u = normal_cdf(latent[j]);
            cols[j].values[r] =
                beta_quantile(u, cfg.marginals[j].alpha, cfg.marginals[j].beta);
        }
    }
    return Dataset(std::move(cols));
}

/// The default three-column copula setup: right-skewed engagement and
/// collaboration, symmetric flexibility, latent correlations
/// (TE,Col)=0.8, (TE,Flex)=0.5, (Col,Flex)=0.6.
inline CopulaConfig default_copula_config(std::size_t n, std::uint64_t seed) {
    CopulaConfig cfg;
    cfg.labels = {"TeamEngagement", "Collaboration", "Flexibility"};
    cfg.latent_corr = make_correlation(cfg.labels, {{1.0, 0.8, 0.5},
                                                    {0.8, 1.0, 0.6},
                                                    {0.5, 0.6, 1.0}});
    cfg.marginals = {{5.0, 2.0}, {4.0, 2.0}, {2.0, 2.0}};
    cfg.n = n;
    cfg.seed = seed;
    return cfg;
}

}  // namespace synthdata
