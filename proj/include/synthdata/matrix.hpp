#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "synthdata/error.hpp"

namespace synthdata {

/// Dense row-major matrix of doubles. Small and boring on purpose; every
/// consumer in this library works at desk scale.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

/// Lower-triangular factor with strictly positive diagonal; entries above the
/// diagonal are exactly zero.
class LowerTriangular {
public:
    explicit LowerTriangular(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) {
            throw ShapeError("LowerTriangular: matrix must be square");
        }
        for (std::size_t i = 0; i < m_.rows(); ++i) {
            if (!(m_(i, i) > 0.0)) {
                throw DomainError("LowerTriangular: diagonal entry " +
                                  std::to_string(i) + " is not positive");
            }
            for (std::size_t j = i + 1; j < m_.cols(); ++j) {
                if (m_(i, j) != 0.0) {
                    throw DomainError("LowerTriangular: nonzero entry above diagonal at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
    }

    std::size_t dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    /// y = L * x
    std::vector<double> apply(const std::vector<double>& x) const {
        if (x.size() != dim()) {
            throw ShapeError("LowerTriangular::apply: vector length " +
                             std::to_string(x.size()) + " != dimension " +
                             std::to_string(dim()));
        }
        std::vector<double> y(dim(), 0.0);
        for (std::size_t i = 0; i < dim(); ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j <= i; ++j) acc += m_(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

private:
    Matrix m_;
};

/// Cholesky factorization m = L * L^T of a symmetric positive-definite
/// matrix. Symmetry is checked to 1e-12; a non-positive pivot raises a
/// FactorizationError naming the failing index.
inline LowerTriangular cholesky(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) {
        throw ShapeError("cholesky: matrix must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
                throw DomainError("cholesky: matrix not symmetric at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = m(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0)) {
            throw FactorizationError(
                "cholesky: matrix is not positive definite (pivot " + std::to_string(j) +
                    " = " + std::to_string(diag) +
                    "); a small diagonal jitter (jitter_repair) can work around "
                    "near-singular targets",
                j);
        }
        l(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            double off = m(i, j);
            for (std::size_t k = 0; k < j; ++k) off -= l(i, k) * l(j, k);
            l(i, j) = off / l(j, j);
        }
    }
    return LowerTriangular(std::move(l));
}

}  // namespace synthdata
