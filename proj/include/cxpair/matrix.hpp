#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxpair/gaussian.hpp"

namespace cxpair {

/// Dense matrix over Gaussian rationals. Shape is fixed at construction;
/// conformance violations throw, never truncate.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Gaussian>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Gaussian(1);
        return m;
    }
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

    /// Elementary matrix unit E_{i,j} of size n (0-based indices).
    static Matrix unit(size_t n, size_t i, size_t j) {
        Matrix m(n, n);
        m(i, j) = Gaussian(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Gaussian& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Gaussian& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Gaussian>& flat() const { return data_; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Gaussian trace() const {
        require(is_square(), "trace of non-square matrix");
        Gaussian t;
        for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in +");
        for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in -");
        for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const Gaussian& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Gaussian& s) { return a *= s; }
    friend Matrix operator*(const Gaussian& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "shape mismatch in matrix product");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Gaussian& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Gaussian& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
        }
        return s + "]";
    }

    static void require(bool cond, const char* what) {
        if (!cond) throw std::invalid_argument(what);
    }

  private:
    size_t rows_, cols_;
    std::vector<Gaussian> data_;
};

/// Lie bracket xy - yx.
inline Matrix bracket(const Matrix& x, const Matrix& y) {
    Matrix::require(x.is_square() && y.is_square() && x.rows() == y.rows(),
                    "bracket needs conforming square matrices");
    return x * y - y * x;
}

/// Exponential of a nilpotent matrix, as the exact finite sum.
/// Throws if the matrix is not nilpotent.
inline Matrix exp_nilpotent(const Matrix& n) {
    Matrix::require(n.is_square(), "exp of non-square matrix");
    Matrix result = Matrix::identity(n.rows());
    Matrix power = n;
    mpz_class fact = 1;
    for (size_t k = 1; k <= n.rows(); ++k) {
        if (power.is_zero()) return result;
        fact *= (long)k;
        result += power * Gaussian(mpq_class(1, fact));
        power = power * n;
    }
    if (!power.is_zero()) throw std::invalid_argument("exp_nilpotent on non-nilpotent matrix");
    return result;
}

/// Row-major flattening of an n x n matrix into an n^2 coordinate vector.
inline std::vector<Gaussian> matrix_to_vec(const Matrix& m) { return m.flat(); }

inline Matrix vec_to_matrix(const std::vector<Gaussian>& v, size_t n) {
    if (v.size() != n * n) throw std::invalid_argument("vector length is not n^2");
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

}  // namespace cxpair
