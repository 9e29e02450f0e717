#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "synthdata/matrix.hpp"
#include "synthdata/rng.hpp"

namespace sd = synthdata;

namespace {

sd::Matrix lower_times_transpose(const sd::Matrix& l) {
    const std::size_t n = l.rows();
    sd::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += l(i, k) * l(j, k);
            m(i, j) = acc;
        }
    }
    return m;
}

}  // namespace

TEST_CASE("cholesky of the identity is the identity") {
    const auto l = sd::cholesky(sd::Matrix::identity(3));
    CHECK(l.matrix() == sd::Matrix::identity(3));
}

TEST_CASE("cholesky of a 2x2 correlation matrix") {
    sd::Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.8;
    m(1, 0) = 0.8;
    m(1, 1) = 1.0;
    const auto l = sd::cholesky(m);
    CHECK(l(0, 0) == 1.0);
    CHECK(l(0, 1) == 0.0);
    CHECK(l(1, 0) == 0.8);
    CHECK(std::abs(l(1, 1) - 0.6) < 1e-15);

    const auto back = lower_times_transpose(l.matrix());
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(std::abs(back(i, j) - m(i, j)) < 1e-15);
        }
    }
}

TEST_CASE("cholesky reports the failing pivot") {
    sd::Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 1.2;
    m(1, 0) = 1.2;
    m(1, 1) = 1.0;
    try {
        sd::cholesky(m);
        FAIL("expected FactorizationError");
    } catch (const sd::FactorizationError& e) {
        CHECK(e.pivot == 1);
    }
}

TEST_CASE("cholesky rejects asymmetric and non-square inputs") {
    sd::Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.5;
    m(1, 0) = 0.5 + 1e-6;
    m(1, 1) = 1.0;
    CHECK_THROWS_AS(sd::cholesky(m), sd::DomainError);
    CHECK_THROWS_AS(sd::cholesky(sd::Matrix(2, 3)), sd::ShapeError);
}

TEST_CASE("cholesky(L L^T) recovers L for random well-conditioned factors") {
    sd::RngStream stream(31337);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            sd::Matrix l(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                l(i, i) = stream.next_uniform(0.5, 1.5);
                for (std::size_t j = 0; j < i; ++j) {
                    l(i, j) = stream.next_uniform(-0.3, 0.3);
                }
            }
            const auto recovered = sd::cholesky(lower_times_transpose(l));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j <= i; ++j) {
                    REQUIRE(std::abs(recovered(i, j) - l(i, j)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("LowerTriangular validates its structure") {
    sd::Matrix bad(2, 2);
    bad(0, 0) = 1.0;
    bad(0, 1) = 0.1;  // above diagonal
    bad(1, 0) = 0.0;
    bad(1, 1) = 1.0;
    CHECK_THROWS_AS(sd::LowerTriangular(bad), sd::DomainError);

    sd::Matrix nonpos(2, 2);
    nonpos(0, 0) = 1.0;
    nonpos(1, 1) = 0.0;  // zero pivot
    CHECK_THROWS_AS(sd::LowerTriangular(nonpos), sd::DomainError);
}

TEST_CASE("LowerTriangular::apply computes L x") {
    sd::Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 0) = 0.8;
    m(1, 1) = 0.6;
    const sd::LowerTriangular l(m);
    const auto y = l.apply({2.0, 3.0});
    CHECK(y[0] == 2.0);
    CHECK(std::abs(y[1] - (0.8 * 2.0 + 0.6 * 3.0)) < 1e-15);
    CHECK_THROWS_AS(l.apply({1.0}), sd::ShapeError);
}
