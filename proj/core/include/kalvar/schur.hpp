#pragma once

#include <map>

#include "kalvar/partition.hpp"
#include "kalvar/symseries.hpp"

namespace kalvar {

/// Integer Schur-basis expansion of a symmetric truncated series,
/// complete through the stated total degree.
struct SchurExpansion {
    int nvars = 0;
    int complete_through = 0;
    std::map<Partition, Int> coeff;

    Int at(const Partition& p) const {
        auto it = coeff.find(p);
        return it == coeff.end() ? Int(0) : it->second;
    }
};

/// Bialternant read-off: multiply by the Vandermonde alternant
/// prod_{i<j}(x_i - x_j) and read the coefficients at the dominant
/// exponents lambda + delta, delta = (s-1, ..., 1, 0). Throws on
/// non-symmetric input.
SchurExpansion schur_decompose(const SymSeries& f);

/// The alternant itself (exact polynomial, homogeneous of degree C(s,2)).
SymSeries vandermonde(int nvars, int cap);

/// s_lambda in `nvars` variables: sum of x^weight over the semistandard
/// tableaux of shape lambda with entries in 1..nvars.
SymSeries schur_polynomial(const Partition& lambda, int nvars, int cap);

}  // namespace kalvar
