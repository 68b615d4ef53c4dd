#pragma once

#include <map>
#include <string>
#include <vector>

#include "kalvar/kalman.hpp"
#include "kalvar/schur.hpp"
#include "kalvar/symseries.hpp"
#include "kalvar/unipoly.hpp"

namespace kalvar {

/// The symmetric series whose rectangle coefficient is deg K_{s,d,n},
/// truncated at total degree s(d-s).
SymSeries expand_degree_series(const StratumSpec& spec);

/// Schur-coefficient route: the coefficient of s_{((d-s)^s)} in the
/// expansion of expand_degree_series.
Int degree_schur(const StratumSpec& spec);

/// C(n, d-1); only for s = 1.
Int degree_binomial(const StratumSpec& spec);

/// Coefficient of t^{d-1} in (1+t)^d/(1-t)^{n-d}; only for s = d-1.
Int degree_univariate(const StratumSpec& spec);

/// Closed form for s = 2, d >= 3, via Pochhammer symbols; evaluated in
/// exact rational arithmetic and required to come out a nonnegative integer.
Int degree_koutschan(int d, long n);

/// 1! 2! ... (s-1)! [s(d-s)]! / ((d-s)! (d-s+1)! ... (d-1)!).
Int grassmannian_degree(int s, int d);

/// deg Gr(s,d) / [s(d-s)]!: the n^{s(d-s)} coefficient of deg K_{s,d,n}.
Rational asymptotic_leading(int s, int d);

/// Cross-route through the Grassmannian fundamental class: take the top
/// homogeneous slice of the Chern series, shift every partition by n-d full
/// columns, truncate to the s x (n-s) box, and read the full-box coefficient.
Int degree_chern_route(const StratumSpec& spec);

struct PolynomialityReport {
    int expected_order = 0;  // s(d-s)
    std::vector<Int> degrees;
    bool differences_vanish = false;  // order s(d-s)+1 differences are zero
    Rational recovered_leading;       // order-s(d-s) difference / (s(d-s))!
    bool leading_matches = false;
};

/// Finite-difference check that n -> deg K_{s,d,n} is a polynomial of
/// degree s(d-s) with the predicted leading coefficient. The window must
/// contain at least s(d-s)+2 values.
PolynomialityReport verify_polynomiality(int s, int d, long n_min, long n_max);

/// Homogeneous bivariate polynomial of degree n-1; coeffs[k] sits on
/// t1^{n-1-k} t2^k.
struct BiDegree {
    std::vector<Int> coeffs;
    std::string str() const;
};

struct MultidegreePair {
    BiDegree incidence;       // t1^{n-1} + t1^{n-2} t2 + ... + t2^{n-1}
    BiDegree substituted;     // the t1 -> t1 + t2 image
    bool matches_binomial = false;  // substituted coefficients equal C(n, k)
};

MultidegreePair multidegree_incidence(int n);

struct DegreeAgreement {
    Int degree;
    std::map<std::string, Int> methods;  // method name -> value
    bool agree = false;
};

/// Every route applicable to the spec, with exact-agreement verdict.
DegreeAgreement degree_all_methods(const StratumSpec& spec);

}  // namespace kalvar
