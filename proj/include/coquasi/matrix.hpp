#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cqh {

struct dimension_error : std::runtime_error {
    dimension_error(const std::string &what) : std::runtime_error(what) {}
};

// Dense row-major matrix over an exact scalar type K.
//
// Every matrix carries a zero element of its field so that empty shapes
// (0 x n kernels and the like) still know which field they live over.
// Linear maps act on column vectors: column j holds the image of e_j.
template <typename K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const K &sample)
        : rows_(rows), cols_(cols), fz_(sample.zero()), data_(rows * cols, sample.zero()) {}

    static Matrix identity(std::size_t n, const K &sample) {
        Matrix m(n, n, sample);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = sample.one();
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows,
                            const K &sample) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(r, c, sample);
        std::size_t i = 0;
        for (const auto &row : rows) {
            if (row.size() != c) throw dimension_error("ragged rows");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = sample.from_int(v);
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K &field() const { return fz_; }

    K &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (a.data_[i] != b.data_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

    bool is_zero() const {
        for (const K &x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
            }
        return true;
    }

    Matrix &operator+=(const Matrix &o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }

    Matrix operator-() const {
        Matrix m(*this);
        for (K &x : m.data_) x = -x;
        return m;
    }

    Matrix scaled(const K &c) const {
        Matrix m(*this);
        for (K &x : m.data_) x *= c;
        return m;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_, fz_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    std::vector<K> row(std::size_t i) const {
        std::vector<K> r(cols_, fz_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<K> col(std::size_t j) const {
        std::vector<K> c(rows_, fz_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const std::vector<K> &c) {
        if (c.size() != rows_) throw dimension_error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

private:
    void check_same_shape(const Matrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    K fz_;
    std::vector<K> data_;
};

namespace kernels {

template <typename K>
Matrix<K> matmul_serial(const Matrix<K> &a, const Matrix<K> &b) {
    if (a.cols() != b.rows()) throw dimension_error("matmul shape mismatch");
    Matrix<K> c(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const K &aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const K &bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

template <typename K>
Matrix<K> matmul_parallel(const Matrix<K> &a, const Matrix<K> &b) {
    if (a.cols() != b.rows()) throw dimension_error("matmul shape mismatch");
    Matrix<K> c(a.rows(), b.cols(), a.field());
    long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const K &aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const K &bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

} // namespace kernels

template <typename K>
Matrix<K> operator*(const Matrix<K> &a, const Matrix<K> &b) {
    if (a.rows() >= 32 || b.cols() >= 32) return kernels::matmul_parallel(a, b);
    return kernels::matmul_serial(a, b);
}

template <typename K>
std::vector<K> mat_apply(const Matrix<K> &m, const std::vector<K> &v) {
    if (m.cols() != v.size()) throw dimension_error("matrix/vector shape mismatch");
    std::vector<K> r(m.rows(), m.field());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const K &mij = m(i, j);
            if (!mij.is_zero()) r[i] += mij * v[j];
        }
    }
    return r;
}

// Kronecker product: (a (x) b)(i*rb + k, j*cb + l) = a(i, j) * b(k, l).
// With columns as images of basis vectors this is the tensor product of
// linear maps for the basis order e_i (x) f_k  <->  i * dim_b + k.
template <typename K>
Matrix<K> kron(const Matrix<K> &a, const Matrix<K> &b) {
    Matrix<K> c(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const K &aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const K &bkl = b(k, l);
                    if (!bkl.is_zero()) c(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return c;
}

// Permutation matrix for the flip v (x) w -> w (x) v on spaces of
// dimensions n and m, with the row-major pair indexing used by kron.
template <typename K>
Matrix<K> swap_matrix(std::size_t n, std::size_t m, const K &sample) {
    Matrix<K> s(n * m, n * m, sample);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) s(j * n + i, i * m + j) = sample.one();
    return s;
}

// Compose a functional on a tensor product with a tensor product of maps,
// one leg at a time: returns f o (legs[0] (x) ... (x) legs[k-1]).
// legs[l] maps its column space into the l-th factor of f's domain.
template <typename K>
std::vector<K> row_compose(std::vector<K> f, const std::vector<const Matrix<K> *> &legs) {
    std::size_t total = 1;
    for (const auto *m : legs) total *= m->rows();
    if (f.size() != total) throw dimension_error("row_compose shape mismatch");
    std::size_t pre = 1, post = f.size();
    for (const auto *m : legs) {
        std::size_t din = m->rows(), dout = m->cols();
        post /= din;
        std::vector<K> g(pre * dout * post, m->field());
        for (std::size_t a = 0; a < pre; ++a)
            for (std::size_t i = 0; i < din; ++i)
                for (std::size_t j = 0; j < dout; ++j) {
                    const K &mij = (*m)(i, j);
                    if (mij.is_zero()) continue;
                    for (std::size_t b = 0; b < post; ++b)
                        g[(a * dout + j) * post + b] += f[(a * din + i) * post + b] * mij;
                }
        f = std::move(g);
        pre *= dout;
    }
    return f;
}

// Apply a tensor product of maps to a vector, one leg at a time:
// returns (legs[0] (x) ... (x) legs[k-1]) v.
template <typename K>
std::vector<K> col_compose(const std::vector<const Matrix<K> *> &legs, std::vector<K> v) {
    std::size_t total = 1;
    for (const auto *m : legs) total *= m->cols();
    if (v.size() != total) throw dimension_error("col_compose shape mismatch");
    std::size_t pre = 1, post = v.size();
    for (const auto *m : legs) {
        std::size_t din = m->cols(), dout = m->rows();
        post /= din;
        std::vector<K> g(pre * dout * post, m->field());
        for (std::size_t a = 0; a < pre; ++a)
            for (std::size_t i = 0; i < dout; ++i)
                for (std::size_t j = 0; j < din; ++j) {
                    const K &mij = (*m)(i, j);
                    if (mij.is_zero()) continue;
                    for (std::size_t b = 0; b < post; ++b)
                        g[(a * dout + i) * post + b] += mij * v[(a * din + j) * post + b];
                }
        v = std::move(g);
        pre *= dout;
    }
    return v;
}

template <typename K>
Matrix<K> hstack(const Matrix<K> &a, const Matrix<K> &b) {
    if (a.rows() != b.rows()) throw dimension_error("hstack row mismatch");
    Matrix<K> c(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

} // namespace cqh
