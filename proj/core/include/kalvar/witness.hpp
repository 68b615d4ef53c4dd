#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "kalvar/kalman.hpp"
#include "kalvar/linalg.hpp"
#include "kalvar/rng.hpp"

namespace kalvar {

/// A matrix certified to lie on K_{s,d,n}, together with the s x n basis
/// (reduced row echelon form, supported on the first d coordinates) of an
/// invariant subspace inside L.
template <class K>
struct SubspaceWitness {
    Matrix<K> a;
    Matrix<K> basis;
};

/// Draws a random member of K_{s,d,n}: a block matrix B keeping
/// span(e_1..e_s) invariant, conjugated by a random invertible g whose
/// lower-left (n-d) x d block vanishes, so g(L) = L. The certified subspace
/// is g(span(e_1..e_s)).
template <class K>
SubspaceWitness<K> make_witness(const StratumSpec& spec, Rng& rng,
                                const std::function<K()>& sample, const K& zero) {
    const size_t n = spec.n, s = spec.s, d = spec.d;

    Matrix<K> b(n, n, zero);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!(i >= s && j < s)) b(i, j) = sample();

    Matrix<K> g(n, n, zero);
    while (true) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) g(i, j) = (i >= d && j < d) ? zero : sample();
        if (is_invertible(g)) break;
    }

    auto ginv = inverse(g);
    Matrix<K> a = g * b * *ginv;

    Matrix<K> basis(s, n, zero);
    for (size_t r = 0; r < s; ++r)
        for (size_t c = 0; c < n; ++c) basis(r, c) = g(c, r);  // column r of g
    return {a, rref(basis).m};
}

inline SubspaceWitness<GFp> make_witness_gfp(const StratumSpec& spec, uint32_t p, uint64_t seed) {
    Rng rng(seed);
    return make_witness<GFp>(
        spec, rng, [&]() { return GFp(static_cast<int64_t>(rng.below(p)), p); }, GFp(0, p));
}

/// Rational witnesses use small integer entries.
inline SubspaceWitness<Rational> make_witness_q(const StratumSpec& spec, uint64_t seed) {
    Rng rng(seed);
    return make_witness<Rational>(
        spec, rng, [&]() { return Rational(rng.in_range(-9, 9)); }, Rational(0));
}

}  // namespace kalvar
