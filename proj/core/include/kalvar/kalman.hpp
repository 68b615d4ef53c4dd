#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kalvar/matrix.hpp"
#include "kalvar/poly.hpp"

namespace kalvar {

/// Names the variety K_{s,d,n}: matrices with an invariant subspace of
/// dimension >= s inside L = span(e_1..e_d) in K^n.
struct StratumSpec {
    int s = 1;
    int d = 1;
    int n = 1;

    StratumSpec(int s_, int d_, int n_) : s(s_), d(d_), n(n_) {
        if (!(1 <= s && s <= d && d <= n))
            throw std::invalid_argument("stratum spec needs 1 <= s <= d <= n");
    }

    /// Codimension in P^{n^2-1}.
    int codim() const { return s * (n - d); }
};

enum class MatrixSource { full, small, reduced };

namespace detail {
template <class T>
void check_kalman_range(const Matrix<T>& a, int d) {
    if (a.rows() != a.cols()) throw std::invalid_argument("A must be square");
    if (d < 1 || d + 1 > static_cast<int>(a.rows()))
        throw std::invalid_argument("d out of range (1 <= d <= n-1)");
}
}  // namespace detail

/// Stack of C, CA, ..., CA^d with C = (0 | I); (d+1)(n-d) rows, n columns.
template <class T>
Matrix<T> kalman_matrix(const Matrix<T>& a, int d) {
    detail::check_kalman_range(a, d);
    const size_t n = a.rows(), nd = n - static_cast<size_t>(d);
    const T one = one_like(a(0, 0));
    const T zero = zero_like(a(0, 0));

    Matrix<T> c(nd, n, zero);
    for (size_t k = 0; k < nd; ++k) c(k, d + k) = one;

    Matrix<T> out = c;
    Matrix<T> block = c;
    for (int k = 1; k <= d; ++k) {
        block = block * a;
        out = out.stacked(block);
    }
    return out;
}

/// Stack of [A], [A^2], ..., [A^d] where [M] keeps the last n-d rows and
/// first d columns; d(n-d) rows, d columns.
template <class T>
Matrix<T> small_kalman_matrix(const Matrix<T>& a, int d) {
    detail::check_kalman_range(a, d);
    const size_t n = a.rows(), nd = n - static_cast<size_t>(d);

    Matrix<T> power = a;
    Matrix<T> out = power.block(d, 0, nd, d);
    for (int k = 2; k <= d; ++k) {
        power = power * a;
        out = out.stacked(power.block(d, 0, nd, d));
    }
    return out;
}

/// Stack of A21, A21 A11, ..., A21 A11^{d-1} built from the blocks of a
/// concrete matrix; equals the small Kalman matrix with A12 = A22 = 0.
template <class T>
Matrix<T> reduced_kalman_matrix(const Matrix<T>& a, int d) {
    detail::check_kalman_range(a, d);
    const size_t n = a.rows(), nd = n - static_cast<size_t>(d);
    Matrix<T> a11 = a.block(0, 0, d, d);
    Matrix<T> a21 = a.block(d, 0, nd, d);

    Matrix<T> block = a21;
    Matrix<T> out = block;
    for (int k = 1; k < d; ++k) {
        block = block * a11;
        out = out.stacked(block);
    }
    return out;
}

/// Generic n x n matrix of variables a_{ij} over Q.
PolyMatrixQ symbolic_matrix(int n);

/// Symbolic reduced Kalman matrix in the d^2 + d(n-d) variables of A11, A21.
PolyMatrixQ reduced_kalman_matrix(int d, int n);

/// Determinant by cofactor expansion along the sparsest row, with sub-minor
/// memoization shared across calls through `MinorCache`. Capped at 9 x 9.
class MinorCache {
public:
    explicit MinorCache(const PolyMatrixQ& m);
    PolyQ determinant(const std::vector<size_t>& rows, const std::vector<size_t>& cols);

private:
    PolyQ det_masked(uint64_t rowmask, uint64_t colmask);
    const PolyMatrixQ& m_;
    std::map<std::pair<uint64_t, uint64_t>, PolyQ> cache_;
};

/// All k x k minors of m, nonzero ones only, sorted by (degree, leading
/// monomial).
std::vector<PolyQ> minors(const PolyMatrixQ& m, size_t k);

/// Generators of the stratum ideal: the (n-s+1)-minors of the Kalman matrix,
/// or the (d-s+1)-minors of the small or reduced Kalman matrix.
std::vector<PolyQ> stratum_generators(const StratumSpec& spec, MatrixSource source);

/// Histogram degree -> count.
std::map<int, int> degree_census(const std::vector<PolyQ>& polys);

/// "2:1 3:4 4:1"
std::string census_str(const std::map<int, int>& census);

}  // namespace kalvar
