#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "groves/errors.hpp"

namespace groves {

// Dense rectangular matrix over an exact ring scalar (Rational, MultiPoly,
// TPoly).  Dimensions are fixed at construction; value semantics throughout.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeError("ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
        Matrix r(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix diff shape mismatch");
        Matrix r(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Row/column selections take 0-based index lists, in the given order.
    Matrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
        Matrix r(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) r(i, j) = (*this)(ri[i], ci[j]);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Antisymmetric square matrix: M(i,j) = -M(j,i), zero diagonal, enforced by
// construction through set(i,j,v) writing both triangles.
template <class T>
class AntisymmetricMatrix {
public:
    explicit AntisymmetricMatrix(std::size_t n) : m_(n, n) {}

    std::size_t size() const { return m_.rows(); }

    void set(std::size_t i, std::size_t j, const T& v) {
        if (i == j) {
            if (!(v == T(0))) throw ShapeError("antisymmetric diagonal must be zero");
            return;
        }
        m_(i, j) = v;
        m_(j, i) = -v;
    }

    const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix<T>& matrix() const { return m_; }

    AntisymmetricMatrix minor_without(const std::vector<std::size_t>& removed_sorted) const {
        std::vector<std::size_t> keep;
        std::size_t r = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            if (r < removed_sorted.size() && removed_sorted[r] == i) {
                ++r;
            } else {
                keep.push_back(i);
            }
        }
        AntisymmetricMatrix out(keep.size());
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a + 1; b < keep.size(); ++b) out.set(a, b, m_(keep[a], keep[b]));
        return out;
    }

private:
    Matrix<T> m_;
};

}  // namespace groves
