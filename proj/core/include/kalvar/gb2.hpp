#pragma once

#include <vector>

#include "kalvar/monomial_ideal.hpp"
#include "kalvar/poly.hpp"
#include "kalvar/unipoly.hpp"

namespace kalvar {

/// The explicit lex Groebner basis of the d=2 stratum ideal: C(n-2,2)
/// quadrics a_i1 a_j2 - a_i2 a_j1 (3 <= i < j <= n) and C(n-1,2) cubics
/// a_11 a_i2 a_j1 - a_12 a_i1 a_j1 + a_21 a_i2 a_j2 - a_22 a_i1 a_j2
/// (3 <= i <= j <= n). The reduced flavor swaps the last cubic term for
/// a_22 a_i2 a_j1 when i < j.
struct GB2Basis {
    int n = 0;
    std::vector<PolyQ> quadrics;
    std::vector<PolyQ> cubics;
    bool reduced = false;

    std::vector<PolyQ> all() const;
};

GB2Basis gb_generators(int n, bool reduced = false);

struct BuchbergerReport {
    size_t pairs_checked = 0;
    bool all_reduce_to_zero = false;
};

/// Reduces every S-pair of the explicit basis against it; pairs run on a
/// few worker threads, aggregated by pair index.
BuchbergerReport verify_buchberger(int n);

struct FacetComplex {
    int n = 0;
    std::vector<std::vector<VarId>> facets;  // shelling order
    std::vector<VarId> support;              // the 2n-3 variables present in M
    int free_count = 0;                      // n^2 - 2n + 3
};

struct InitialIdealInfo {
    std::vector<Monomial> generators;  // leading monomials of the basis
    FacetComplex complex;
    bool intersection_matches = false;  // M == intersection of facet primes
    bool unmixed = false;               // all facet primes of equal codimension
    int codim = 0;                      // n - 2
    int degree = 0;                     // number of facets = n
};

InitialIdealInfo initial_ideal_and_facets(int n);

/// Graded dimension of the d=2 quotient ring at degree t: standard
/// monomials of the initial ideal over its 2n-3 support variables,
/// convolved with the free-variable series.
Int hilbert_function(int n, int t);

/// The closed rational form of the Hilbert series (single fraction over
/// (1-z)^{n^2-n+2}).
UniRationalFn hilbert_series_closed(int n);

/// The same series assembled from the shelling data: the facet-complex
/// series (1+(n-1)z)/(1-z)^{n-1} minus z/(1-z), times the free factor.
UniRationalFn hilbert_series_shelling(int n);

/// Hilbert polynomial in t, as the alternating sum of binomial polynomials
/// C(t+r, r) with r = n^2-n+1, n^2-n, n^2-2n+3, n^2-2n+2.
UniPolyQ hilbert_polynomial(int n);

/// Least t0 <= tmax with hilbert_function(n,t) equal to the Hilbert
/// polynomial for all t in [t0, tmax]; tmax+1 when even tmax disagrees.
int agreement_threshold(int n, int tmax = 8);

/// Every 2x2 minor of the full-variable small Kalman matrix reduces to 0
/// against the explicit basis.
bool small_minors_reduce_to_zero(int n);

}  // namespace kalvar
