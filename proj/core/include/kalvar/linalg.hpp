#pragma once

#include <optional>
#include <vector>

#include "kalvar/matrix.hpp"

namespace kalvar {

/// Fraction-free Bareiss elimination on the numerator matrix after clearing
/// row denominators; exact rank over Q.
inline size_t exact_rank(const MatrixQ& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (size_t j = 0; j < cols; ++j) {
            Int t;
            mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
            l = t;
        }
        for (size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }

    Int prev = 1;
    size_t rank = 0;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && a[piv][pc] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[pr]);
        for (size_t i = pr + 1; i < rows; ++i) {
            for (size_t j = pc + 1; j < cols; ++j) {
                Int num = a[i][j] * a[pr][pc] - a[i][pc] * a[pr][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][pc] = 0;
        }
        prev = a[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

/// Standard Gaussian elimination over GF(p).
inline size_t exact_rank(const MatrixGFp& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<GFp>> a(rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i].push_back(m(i, j));

    size_t rank = 0, pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && a[piv][pc].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[pr]);
        GFp inv = a[pr][pc].inverse();
        for (size_t i = pr + 1; i < rows; ++i) {
            if (a[i][pc].is_zero()) continue;
            GFp f = a[i][pc] * inv;
            for (size_t j = pc; j < cols; ++j) a[i][j] -= f * a[pr][j];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

template <class K>
struct RrefResult {
    Matrix<K> m;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Reduced row echelon form over an exact field.
template <class K>
RrefResult<K> rref(Matrix<K> a) {
    const size_t rows = a.rows(), cols = a.cols();
    RrefResult<K> out{a, {}, 0};
    Matrix<K>& m = out.m;
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && m(piv, pc).is_zero()) ++piv;
        if (piv == rows) continue;
        for (size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(pr, j));
        K inv = m(pr, pc).inverse();
        for (size_t j = 0; j < cols; ++j) m(pr, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || m(i, pc).is_zero()) continue;
            K f = m(i, pc);
            for (size_t j = 0; j < cols; ++j) m(i, j) -= f * m(pr, j);
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    out.rank = pr;
    return out;
}

/// Basis of the right kernel {x : M x = 0}, one vector per free column of
/// the RREF.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
    auto r = rref(m);
    const size_t cols = m.cols();
    const K zero = zero_like(m(0, 0));
    const K one = one_like(m(0, 0));

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<K>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<K> v(cols, zero);
        v[fc] = one;
        for (size_t k = 0; k < r.pivot_cols.size(); ++k) v[r.pivot_cols[k]] = -r.m(k, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const size_t n = m.rows();
    const K zero = zero_like(m(0, 0));
    const K one = one_like(m(0, 0));
    Matrix<K> aug(n, 2 * n, zero);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    auto r = rref(std::move(aug));
    if (r.rank < n) return std::nullopt;
    return r.m.block(0, n, n, n);
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
    return m.rows() == m.cols() && exact_rank(m) == m.rows();
}

/// M v for a plain vector.
template <class K>
std::vector<K> mat_apply(const Matrix<K>& m, const std::vector<K>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("apply shape mismatch");
    std::vector<K> out(m.rows(), zero_like(m(0, 0)));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

}  // namespace kalvar
