#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace loadcast {

// Dense row-major matrix. All problems here are small (network layers,
// 30x30 normal equations), so a flat vector with explicit loops is enough.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }
    double* row_ptr(std::size_t r) { return data.data() + r * cols; }

    std::vector<double> row(std::size_t r) const {
        return std::vector<double>(row_ptr(r), row_ptr(r) + cols);
    }
};

// y = M x
inline std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
    if (x.size() != m.cols) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(m.rows, 0.0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* p = m.row_ptr(r);
        double acc = 0.0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += p[c] * x[c];
        y[r] = acc;
    }
    return y;
}

// y = M^T x
inline std::vector<double> matvec_t(const Matrix& m, const std::vector<double>& x) {
    if (x.size() != m.rows) throw std::invalid_argument("matvec_t: dimension mismatch");
    std::vector<double> y(m.cols, 0.0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* p = m.row_ptr(r);
        const double xr = x[r];
        for (std::size_t c = 0; c < m.cols; ++c) y[c] += p[c] * xr;
    }
    return y;
}

// M += scale * a b^T
inline void add_outer(Matrix& m, const std::vector<double>& a,
                      const std::vector<double>& b, double scale = 1.0) {
    if (a.size() != m.rows || b.size() != m.cols) {
        throw std::invalid_argument("add_outer: dimension mismatch");
    }
    for (std::size_t r = 0; r < m.rows; ++r) {
        double* p = m.row_ptr(r);
        const double ar = scale * a[r];
        for (std::size_t c = 0; c < m.cols; ++c) p[c] += ar * b[c];
    }
}

inline void axpy(std::vector<double>& y, const std::vector<double>& x, double a) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Solves A x = b for symmetric positive definite A (in-place Cholesky).
inline std::vector<double> cholesky_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows;
    if (a.cols != n || b.size() != n) {
        throw std::invalid_argument("cholesky_solve: dimension mismatch");
    }
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (d <= 0.0) throw std::runtime_error("cholesky_solve: matrix not positive definite");
        const double ljj = std::sqrt(d);
        a(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
            a(i, j) = s / ljj;
        }
    }
    // forward substitution L y = b
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= a(i, k) * b[k];
        b[i] = s / a(i, i);
    }
    // back substitution L^T x = y
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= a(k, ii) * b[k];
        b[ii] = s / a(ii, ii);
    }
    return b;
}

} // namespace loadcast
