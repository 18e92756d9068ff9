#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace meb {

/// Dense row-major double matrix.  Constructors and kernels guarantee all
/// entries are finite; dimensions are always >= 1x1.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);  // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }

    std::span<const double> data() const { return data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

/// c[i,j] = sum_p a[i,p]*b[p,j], accumulated in ascending p for every entry.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Solves a*x = b for symmetric positive definite a via an unpivoted
/// Cholesky factorization.  a must be symmetric within 1e-12 relative; a
/// pivot <= 1e-14 * trace(a) is treated as singular.
Matrix solve_spd(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

/// Max-norm of (a - b); shapes must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace meb
