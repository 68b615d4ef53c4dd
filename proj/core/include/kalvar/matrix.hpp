#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "kalvar/poly.hpp"

namespace kalvar {

template <class K>
Poly<K> zero_like(const Poly<K>&) { return Poly<K>{}; }

/// Dense rectangular matrix with exact entries (field scalars or
/// polynomials), row-major, 0-based accessors.
template <class T>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("matrix extents must be positive");
    }

    static Matrix from(size_t rows, size_t cols, const std::function<T(size_t, size_t)>& gen) {
        Matrix m(rows, cols, gen(0, 0));
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) m(r, c) = gen(r, c);
        return m;
    }

    static Matrix identity(size_t n, const T& one) {
        Matrix m(n, n, zero_like(one));
        for (size_t k = 0; k < n; ++k) m(k, k) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t r, size_t c) { return e_.at(r * cols_ + c); }
    const T& operator()(size_t r, size_t c) const { return e_.at(r * cols_ + c); }

    Matrix block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
        if (r0 + nrows > rows_ || c0 + ncols > cols_)
            throw std::invalid_argument("block out of range");
        return from(nrows, ncols, [&](size_t r, size_t c) -> T { return (*this)(r0 + r, c0 + c); });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, zero_like(a(0, 0)));
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        Matrix r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }

    Matrix pow(unsigned e, const T& one) const {
        if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
        Matrix r = identity(rows_, one);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    /// Rows of `below` appended under this matrix.
    Matrix stacked(const Matrix& below) const {
        if (cols_ != below.cols_) throw std::invalid_argument("stack shape mismatch");
        Matrix r(rows_ + below.rows_, cols_, e_[0]);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (size_t i = 0; i < below.rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = below(i, j);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    size_t rows_, cols_;
    std::vector<T> e_;
};

template <class K>
using ScalarMatrix = Matrix<K>;
template <class K>
using PolyMatrix = Matrix<Poly<K>>;

using MatrixQ = Matrix<Rational>;
using MatrixGFp = Matrix<GFp>;
using PolyMatrixQ = Matrix<PolyQ>;

}  // namespace kalvar
