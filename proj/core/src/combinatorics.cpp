#include "kalvar/combinatorics.hpp"

#include <stdexcept>

namespace kalvar {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer needs n >= 0");
    Rational prod = 1;
    for (long i = 0; i < n; ++i) prod *= a + Rational(i);
    return prod;
}

Int gaussian_binomial(long d, long s, uint32_t p) {
    if (s < 0 || s > d) return 0;
    // prod_{i=0}^{s-1} (p^{d-i} - 1) / (p^{i+1} - 1), computed exactly.
    Int num = 1, den = 1;
    Int pz = p;
    for (long i = 0; i < s; ++i) {
        Int t;
        mpz_pow_ui(t.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d - i));
        num *= t - 1;
        mpz_pow_ui(t.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(i + 1));
        den *= t - 1;
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("gaussian binomial not integral");
    return q;
}

}  // namespace kalvar
