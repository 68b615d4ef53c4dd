#pragma once

#include <stdexcept>

#include "kalvar/kalman.hpp"
#include "kalvar/linalg.hpp"

namespace kalvar {

template <class K>
struct MembershipDetail {
    bool member = false;
    size_t rank_full = 0;   // rank of the (d+1)(n-d) x n stack
    size_t rank_small = 0;  // rank of the d(n-d) x d stack
};

/// Rank test for A in K_{s,d,n}: the Kalman stack has rank <= n-s iff the
/// small Kalman stack has rank <= d-s. Both ranks are computed and the two
/// criteria are required to agree.
template <class K>
MembershipDetail<K> membership_detail(const Matrix<K>& a, const StratumSpec& spec) {
    if (a.rows() != a.cols() || a.rows() != static_cast<size_t>(spec.n))
        throw std::invalid_argument("matrix size does not match spec");
    MembershipDetail<K> out;
    out.rank_full = exact_rank(kalman_matrix(a, spec.d));
    out.rank_small = exact_rank(small_kalman_matrix(a, spec.d));
    bool full_crit = out.rank_full <= static_cast<size_t>(spec.n - spec.s);
    bool small_crit = out.rank_small <= static_cast<size_t>(spec.d - spec.s);
    if (full_crit != small_crit)
        throw std::logic_error("rank criteria on the two Kalman stacks disagree");
    out.member = full_crit;
    return out;
}

template <class K>
bool is_member(const Matrix<K>& a, const StratumSpec& spec) {
    return membership_detail(a, spec).member;
}

/// The kernel of the Kalman stack is mapped into itself by A; checked by
/// annihilating each image against the stack.
template <class K>
bool kalman_kernel_invariance(const Matrix<K>& a, int d) {
    Matrix<K> km = kalman_matrix(a, d);
    const K zero = zero_like(a(0, 0));
    for (const auto& v : kernel_basis(km)) {
        std::vector<K> image = mat_apply(a, v);
        for (const K& coord : mat_apply(km, image))
            if (!(coord == zero)) return false;
    }
    return true;
}

}  // namespace kalvar
