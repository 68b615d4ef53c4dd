#pragma once

#include <cstdint>

#include "kalvar/rational.hpp"

namespace kalvar {

/// Exact binomial coefficient; 0 whenever k < 0 or k > n.
Int binomial(long n, long k);

Int factorial(long n);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product is 1.
Rational pochhammer(const Rational& a, long n);

/// Number of s-dimensional subspaces of GF(p)^d.
Int gaussian_binomial(long d, long s, uint32_t p);

}  // namespace kalvar
