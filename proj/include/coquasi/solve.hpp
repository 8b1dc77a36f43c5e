#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace cqh {

struct singular_matrix_error : std::runtime_error {
    singular_matrix_error(const std::string &what) : std::runtime_error(what) {}
};

namespace kernels {

// Gauss-Jordan to reduced row echelon form, in place.
// Returns the pivot column indices in order. The reduction runs left to
// right with full elimination, so the result is the canonical RREF.
template <typename K>
std::vector<std::size_t> rref_serial(Matrix<K> &m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
        K d = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= d;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename K>
std::vector<std::size_t> rref_parallel(Matrix<K> &m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
        K d = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= d;
        long n = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            if (static_cast<std::size_t>(i) == row || m(i, col).is_zero()) continue;
            K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace kernels

template <typename K>
std::vector<std::size_t> rref(Matrix<K> &m) {
    if (m.rows() >= 32) return kernels::rref_parallel(m);
    return kernels::rref_serial(m);
}

template <typename K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

namespace detail {

// Canonical kernel basis read off an RREF: one column per free column f,
// with a 1 in slot f and -R(k, f) in the slot of the k-th pivot column.
template <typename K>
Matrix<K> kernel_from_rref(const Matrix<K> &r, const std::vector<std::size_t> &pivots,
                           std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::size_t nfree = ncols - pivots.size();
    Matrix<K> ker(ncols, nfree, r.field());
    std::size_t c = 0;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        ker(f, c) = r.field().one();
        for (std::size_t k = 0; k < pivots.size(); ++k) ker(pivots[k], c) -= r(k, f);
        ++c;
    }
    return ker;
}

} // namespace detail

template <typename K>
Matrix<K> kernel_basis(const Matrix<K> &a) {
    Matrix<K> r = a;
    auto pivots = rref(r);
    return detail::kernel_from_rref(r, pivots, a.cols());
}

template <typename K>
struct SolutionSpace {
    std::optional<std::vector<K>> particular; // absent when inconsistent
    Matrix<K> kernel;                         // columns: canonical kernel basis

    bool has_solution() const { return particular.has_value(); }
    bool unique() const { return has_solution() && kernel.cols() == 0; }
};

template <typename K>
SolutionSpace<K> solve(const Matrix<K> &a, const std::vector<K> &b) {
    if (a.rows() != b.size()) throw dimension_error("solve: rhs length mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    SolutionSpace<K> s{std::nullopt, Matrix<K>(0, 0, a.field())};
    bool consistent = pivots.empty() || pivots.back() != a.cols();
    std::vector<std::size_t> colpivots;
    for (std::size_t p : pivots)
        if (p < a.cols()) colpivots.push_back(p);
    s.kernel = detail::kernel_from_rref(aug, colpivots, a.cols());
    if (consistent) {
        std::vector<K> x(a.cols(), a.field());
        for (std::size_t k = 0; k < colpivots.size(); ++k) x[colpivots[k]] = aug(k, a.cols());
        s.particular = std::move(x);
    }
    return s;
}

// Solve A X = B for all columns of B at once. Returns a particular solution
// (free variables zero) or nothing if any column is inconsistent.
template <typename K>
std::optional<Matrix<K>> solve_matrix(const Matrix<K> &a, const Matrix<K> &b) {
    if (a.rows() != b.rows()) throw dimension_error("solve_matrix: rhs shape mismatch");
    Matrix<K> aug = hstack(a, b);
    auto pivots = rref(aug);
    std::vector<std::size_t> colpivots;
    for (std::size_t p : pivots) {
        if (p >= a.cols()) return std::nullopt;
        colpivots.push_back(p);
    }
    Matrix<K> x(a.cols(), b.cols(), a.field());
    for (std::size_t k = 0; k < colpivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(colpivots[k], j) = aug(k, a.cols() + j);
    return x;
}

template <typename K>
Matrix<K> invert(const Matrix<K> &a) {
    if (a.rows() != a.cols()) throw dimension_error("invert: matrix not square");
    Matrix<K> aug = hstack(a, Matrix<K>::identity(a.rows(), a.field()));
    auto pivots = rref(aug);
    if (pivots.size() != a.rows() || (!pivots.empty() && pivots.back() >= a.cols()))
        throw singular_matrix_error("matrix not invertible");
    Matrix<K> inv(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) inv(i, j) = aug(i, a.cols() + j);
    return inv;
}

} // namespace cqh
