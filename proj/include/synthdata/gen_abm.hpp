#pragma once

// Agent-based generator: each agent carries a performance score in [0,100];
// every behavior metric is an independent clipped-normal draw centered on the
// normalized score,
//   M = clamp(N(p/100, sigma^2), 0, 1) * 100.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "synthdata/dataset.hpp"
#include "synthdata/rng.hpp"

namespace synthdata {

struct Agent {
    std::size_t id = 0;
    double performance_score = 0.0;  // in [0, 100]
};

/// Performance scores drawn uniformly from [lo, hi] (itself within [0,100]).
struct PerformanceUniform {
    double lo = 40.0;
    double hi = 95.0;
};

/// Performance scores taken from a column of an ingested dataset. The column
/// length must equal n_agents and every value must lie in [0,100].
struct PerformanceFromColumn {
    Dataset source;
    std::string column;
};

inline const std::vector<std::string>& default_metric_names() {
    static const std::vector<std::string> names = {"TeamEngagement", "Collaboration",
                                                   "Flexibility"};
    return names;
}

struct AbmConfig {
    std::size_t n_agents = 0;
    std::vector<std::string> metric_names = default_metric_names();
    double sigma = 0.1;
    std::variant<PerformanceUniform, PerformanceFromColumn> performance_source =
        PerformanceUniform{};
    std::uint64_t seed = 0;
};

/// One metric draw: g ~ N(p/100, sigma^2), clamped to [0,1], scaled to
/// [0,100]. Consumes exactly one stream draw.
inline double behavior_metric(double p, double sigma, RngStream& stream) {
    if (!(p >= 0.0 && p <= 100.0)) {
        throw DomainError("behavior_metric: performance score must lie in [0,100], got " +
                          std::to_string(p));
    }
    if (!(sigma > 0.0)) {
        throw DomainError("behavior_metric: sigma must be positive");
    }
    const double g = p / 100.0 + sigma * stream.next_standard_normal();
    const double clamped = g < 0.0 ? 0.0 : (g > 1.0 ? 1.0 : g);
    return clamped * 100.0;
}

/// Full simulation: one row per agent, columns
/// [PerformanceScore, metric...]. Draw order: all performance scores first
/// (uniform source only), then row-major metric draws.
inline Dataset gen_abm(const AbmConfig& cfg) {
    if (cfg.n_agents < 1) throw DomainError("gen_abm: n_agents must be >= 1");
    if (!(cfg.sigma > 0.0)) throw DomainError("gen_abm: sigma must be positive");
    if (cfg.metric_names.empty()) {
        throw DomainError("gen_abm: at least one metric name is required");
    }

    RngStream stream(cfg.seed);
    std::vector<double> scores(cfg.n_agents);
    if (const auto* uni = std::get_if<PerformanceUniform>(&cfg.performance_source)) {
        if (!(uni->lo >= 0.0 && uni->lo <= uni->hi && uni->hi <= 100.0)) {
            throw DomainError("gen_abm: uniform range must satisfy 0 <= lo <= hi <= 100");
        }
        for (auto& s : scores) s = stream.next_uniform(uni->lo, uni->hi);
    } else {
        const auto& from = std::get<PerformanceFromColumn>(cfg.performance_source);
        const Column& col = from.source.column(from.column);  // LookupError if absent
        if (col.values.size() != cfg.n_agents) {
            throw DomainError("gen_abm: column \"" + from.column + "\" has " +
                              std::to_string(col.values.size()) + " values but n_agents is " +
                              std::to_string(cfg.n_agents));
        }
        for (std::size_t i = 0; i < cfg.n_agents; ++i) {
            const double p = col.values[i];
            if (!(p >= 0.0 && p <= 100.0)) {
                throw DomainError("gen_abm: performance score " + std::to_string(p) +
                                  " at row " + std::to_string(i + 1) +
                                  " lies outside [0,100]");
            }
            scores[i] = p;
        }
    }

    std::vector<Column> cols;
    cols.reserve(1 + cfg.metric_names.size());
    cols.push_back(Column{"PerformanceScore", scores});
    for (const auto& name : cfg.metric_names) {
        cols.push_back(Column{name, std::vector<double>(cfg.n_agents)});
    }
    for (std::size_t r = 0; r < cfg.n_agents; ++r) {
        for (std::size_t m = 0; m < cfg.metric_names.size(); ++m) {
            cols[1 + m].values[r] = behavior_metric(scores[r], cfg.sigma, stream);
        }
    }
    return Dataset(std::move(cols));
}

}  // namespace synthdata
