#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "synthdata/correlation.hpp"
#include "synthdata/gen_abm.hpp"

namespace sd = synthdata;

TEST_CASE("behavior_metric stays in [0,100] and respects its domain") {
    sd::RngStream stream(1);
    for (int i = 0; i < 20000; ++i) {
        const double m = sd::behavior_metric(97.0, 0.4, stream);
        REQUIRE(m >= 0.0);
        REQUIRE(m <= 100.0);
    }
    CHECK_THROWS_AS(sd::behavior_metric(-1.0, 0.1, stream), sd::DomainError);
    CHECK_THROWS_AS(sd::behavior_metric(101.0, 0.1, stream), sd::DomainError);
    CHECK_THROWS_AS(sd::behavior_metric(50.0, 0.0, stream), sd::DomainError);
}

TEST_CASE("behavior_metric at p=50 has the unclipped moments") {
    // 5 sigma from either clamp, so clipping is negligible: mean 50, std 10.
    sd::RngStream stream(2);
    const int n = 10000;
    double sum = 0.0;
    double sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double m = sd::behavior_metric(50.0, 0.1, stream);
        sum += m;
        sumsq += m * m;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sumsq / n - mean * mean);
    CHECK(mean == Catch::Approx(50.0).margin(1.0));
    CHECK(sd == Catch::Approx(10.0).margin(1.0));
}

TEST_CASE("behavior_metric at p=100 loses half the upper tail to the clamp") {
    // E[min(N(1, 0.1^2), 1)] = 1 - 0.1/sqrt(2 pi), so the mean is ~96.01.
    sd::RngStream stream(3);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += sd::behavior_metric(100.0, 0.1, stream);
    }
    CHECK(sum / n == Catch::Approx(96.0105771959857).margin(0.3));
}

TEST_CASE("gen_abm output shape and range") {
    sd::AbmConfig cfg;
    cfg.n_agents = 2000;
    cfg.performance_source = sd::PerformanceUniform{0.0, 100.0};
    cfg.seed = 4;
    const sd::Dataset d = gen_abm(cfg);
    CHECK(d.n_rows() == 2000);
    REQUIRE(d.column_names() ==
            std::vector<std::string>{"PerformanceScore", "TeamEngagement", "Collaboration",
                                     "Flexibility"});
    for (const auto& col : d.columns()) {
        for (double v : col.values) {
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 100.0);
        }
    }
}

TEST_CASE("gen_abm with a single agent") {
    sd::AbmConfig cfg;
    cfg.n_agents = 1;
    cfg.seed = 5;
    CHECK(gen_abm(cfg).n_rows() == 1);
}

TEST_CASE("metrics are conditionally independent given a fixed score") {
    sd::AbmConfig cfg;
    cfg.n_agents = 10000;
    cfg.performance_source = sd::PerformanceUniform{70.0, 70.0};  // all agents equal
    cfg.seed = 6;
    const sd::Dataset d = gen_abm(cfg);
    // per-metric mean ~ 70 with clipping negligible
    for (const auto& name : sd::default_metric_names()) {
        CHECK(sd::column_stats(d, name).mean == Catch::Approx(70.0).margin(1.0));
    }
    const sd::Dataset metrics_only({{"m1", d.column(1).values},
                                    {"m2", d.column(2).values},
                                    {"m3", d.column(3).values}});
    const auto corr = sd::correlation_matrix(metrics_only);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK(std::abs(corr.entries(i, j)) <= 0.05);
        }
    }
}

TEST_CASE("metrics track the performance score across a wide population") {
    // With uniform(0,100) scores, corr(metric, score) is analytically
    // (1/12)/sqrt((1/12)(1/12 + 0.01)) ~ 0.945; test comfortably above 0.9.
    sd::AbmConfig cfg;
    cfg.n_agents = 10000;
    cfg.performance_source = sd::PerformanceUniform{0.0, 100.0};
    cfg.seed = 7;
    const sd::Dataset d = gen_abm(cfg);
    const auto corr = sd::correlation_matrix(d);
    for (std::size_t m = 1; m < 4; ++m) {
        CHECK(corr.entries(0, m) > 0.9);
    }
}

TEST_CASE("gen_abm determinism and validation") {
    sd::AbmConfig cfg;
    cfg.n_agents = 100;
    cfg.seed = 8;
    CHECK(gen_abm(cfg) == gen_abm(cfg));
    cfg.seed = 9;
    CHECK_FALSE(gen_abm(cfg) == gen_abm(sd::AbmConfig{100, sd::default_metric_names(), 0.1,
                                                      sd::PerformanceUniform{}, 8}));

    cfg.n_agents = 0;
    CHECK_THROWS_AS(gen_abm(cfg), sd::DomainError);
    cfg.n_agents = 10;
    cfg.performance_source = sd::PerformanceUniform{50.0, 120.0};
    CHECK_THROWS_AS(gen_abm(cfg), sd::DomainError);
}

TEST_CASE("gen_abm ingests performance scores from a column") {
    const sd::Dataset source({{"Perf", {10, 50, 90}}, {"Other", {1, 2, 3}}});
    sd::AbmConfig cfg;
    cfg.n_agents = 3;
    cfg.sigma = 0.01;
    cfg.performance_source = sd::PerformanceFromColumn{source, "Perf"};
    cfg.seed = 10;
    const sd::Dataset d = gen_abm(cfg);
    CHECK(d.column("PerformanceScore").values == std::vector<double>{10, 50, 90});

    cfg.performance_source = sd::PerformanceFromColumn{source, "Missing"};
    CHECK_THROWS_AS(gen_abm(cfg), sd::LookupError);

    cfg.performance_source = sd::PerformanceFromColumn{source, "Perf"};
    cfg.n_agents = 5;  // length mismatch
    CHECK_THROWS_AS(gen_abm(cfg), sd::DomainError);

    const sd::Dataset out_of_range({{"Perf", {10, 150, 90}}});
    cfg.n_agents = 3;
    cfg.performance_source = sd::PerformanceFromColumn{out_of_range, "Perf"};
    CHECK_THROWS_AS(gen_abm(cfg), sd::DomainError);
}
