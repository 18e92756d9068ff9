#include "meb/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "meb/errors.hpp"
#include "meb/kernels.hpp"

namespace meb {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values)
        if (!std::isfinite(v))
            throw NumericError(std::string(what) + ": non-finite entry");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0)
        throw ShapeError("Matrix: dimensions must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0)
        throw ShapeError("Matrix: dimensions must be >= 1");
    if (data_.size() != rows * cols)
        throw ShapeError("Matrix: data length " + std::to_string(data_.size()) +
                         " != " + std::to_string(rows) + "x" + std::to_string(cols));
    require_finite(data_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " do not match");
    Matrix c(a.rows(), b.cols());
    const std::size_t k = a.cols();
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* crow = c.row(i);
        kernels::scale(crow, a(i, 0), b.row(0), n);
        for (std::size_t p = 1; p < k; ++p) kernels::axpy(crow, a(i, p), b.row(p), n);
    }
    require_finite(c.data(), "matmul");
    return c;
}

Matrix solve_spd(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ShapeError("solve_spd: matrix is not square");
    if (b.rows() != n)
        throw ShapeError("solve_spd: rhs has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(n));

    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        trace += a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::fabs(a(i, j) - a(j, i));
            const double m = std::fmax(std::fabs(a(i, j)), std::fabs(a(j, i)));
            if (d > 1e-12 * m)
                throw ShapeError("solve_spd: matrix is not symmetric at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }

    // Lower Cholesky factor, unpivoted; inner sums run in ascending k.
    Matrix l(n, n);
    const double pivot_floor = 1e-14 * trace;
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > pivot_floor))
            throw SingularError("solve_spd: pivot " + std::to_string(diag) +
                                " at column " + std::to_string(j) +
                                " (matrix not positive definite)");
        const double root = std::sqrt(diag);
        l(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / root;
        }
    }

    const std::size_t m = b.cols();
    Matrix x = b;
    // Forward substitution: L y = b.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k)
            kernels::axpy(x.row(i), -l(i, k), x.row(k), m);
        kernels::scale(x.row(i), 1.0 / l(i, i), x.row(i), m);
    }
    // Back substitution: L^T x = y.
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k)
            kernels::axpy(x.row(ii), -l(k, ii), x.row(k), m);
        kernels::scale(x.row(ii), 1.0 / l(ii, ii), x.row(ii), m);
    }
    require_finite(x.data(), "solve_spd");
    return x;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::fmax(worst, std::fabs(a.data()[i] - b.data()[i]));
    return worst;
}

}  // namespace meb
