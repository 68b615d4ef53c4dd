#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kalvar/combinatorics.hpp"
#include "kalvar/kalman.hpp"
#include "kalvar/linalg.hpp"

namespace kalvar {

/// Enumerates every s-dimensional subspace of GF(p)^d exactly once through
/// its reduced-row-echelon basis: pivot column patterns in lexicographic
/// order, free entries in odometer order. The visitor receives the s x d
/// basis matrix and may return false to stop early.
inline void enumerate_subspaces(int s, int d, uint32_t p,
                                const std::function<bool(const MatrixGFp&)>& visit) {
    if (s < 1 || s > d) throw std::invalid_argument("need 1 <= s <= d");
    std::vector<int> pivots(s);
    for (int k = 0; k < s; ++k) pivots[k] = k;

    auto run_pattern = [&](const std::vector<int>& piv) -> bool {
        // Free positions: (row r, col c) with c > piv[r] and c not a pivot.
        std::vector<bool> is_pivot(d, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < s; ++r)
            for (int c = piv[r] + 1; c < d; ++c)
                if (!is_pivot[c]) free_pos.push_back({r, c});

        std::vector<uint32_t> vals(free_pos.size(), 0);
        while (true) {
            MatrixGFp m(s, d, GFp(0, p));
            for (int r = 0; r < s; ++r) m(r, piv[r]) = GFp(1, p);
            for (size_t k = 0; k < free_pos.size(); ++k)
                m(free_pos[k].first, free_pos[k].second) = GFp(vals[k], p);
            if (!visit(m)) return false;

            size_t k = 0;
            while (k < vals.size() && ++vals[k] == p) vals[k++] = 0;
            if (k == vals.size()) return true;
        }
    };

    while (true) {
        if (!run_pattern(pivots)) return;
        int k = s;
        bool advanced = false;
        while (k-- > 0) {
            if (pivots[k] + (s - k) < d) {
                ++pivots[k];
                for (int j = k + 1; j < s; ++j) pivots[j] = pivots[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

/// True when the row space of `basis` (vectors in GF(p)^n) is mapped into
/// itself by A.
inline bool invariant_under(const MatrixGFp& a, const MatrixGFp& basis) {
    auto r = rref(basis);
    const size_t n = a.rows();
    for (size_t row = 0; row < basis.rows(); ++row) {
        std::vector<GFp> v(n, GFp(0, a(0, 0).modulus()));
        for (size_t c = 0; c < basis.cols(); ++c) v[c] = basis(row, c);
        std::vector<GFp> w = mat_apply(a, v);
        // Reduce w against the RREF rows, then demand zero.
        for (size_t k = 0; k < r.pivot_cols.size(); ++k) {
            GFp f = w[r.pivot_cols[k]];
            if (f.is_zero()) continue;
            for (size_t c = 0; c < basis.cols(); ++c) w[c] -= f * r.m(k, c);
        }
        for (const GFp& coord : w)
            if (!coord.is_zero()) return false;
    }
    return true;
}

/// Exhaustive membership test over GF(p): searches for an s-dimensional
/// A-invariant subspace inside L = span(e_1..e_d). The Gaussian-binomial
/// count of candidate subspaces must not exceed the cap.
inline bool brute_force_member(const MatrixGFp& a, const StratumSpec& spec,
                               uint64_t cap = 1000000) {
    if (a.rows() != a.cols() || a.rows() != static_cast<size_t>(spec.n))
        throw std::invalid_argument("matrix size does not match spec");
    const uint32_t p = a(0, 0).modulus();
    if (gaussian_binomial(spec.d, spec.s, p) > Int(static_cast<unsigned long>(cap)))
        throw std::runtime_error("enumeration cap exceeded");

    bool found = false;
    enumerate_subspaces(spec.s, spec.d, p, [&](const MatrixGFp& basis_d) {
        // Embed the s x d basis into GF(p)^n; coordinates d+1..n stay zero.
        MatrixGFp basis(spec.s, spec.n, GFp(0, p));
        for (int r = 0; r < spec.s; ++r)
            for (int c = 0; c < spec.d; ++c) basis(r, c) = basis_d(r, c);
        if (invariant_under(a, basis)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace kalvar
