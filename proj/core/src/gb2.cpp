#include "kalvar/gb2.hpp"

#include <algorithm>
#include <thread>

#include "kalvar/combinatorics.hpp"
#include "kalvar/division.hpp"
#include "kalvar/kalman.hpp"

namespace kalvar {

namespace {

VarId av(int i, int j) { return {static_cast<uint16_t>(i), static_cast<uint16_t>(j)}; }

PolyQ quadric(int i, int j) {
    PolyQ f;
    f.add_term(Monomial({{av(i, 1), 1}, {av(j, 2), 1}}), Rational(1));
    f.add_term(Monomial({{av(i, 2), 1}, {av(j, 1), 1}}), Rational(-1));
    return f;
}

PolyQ cubic(int i, int j, bool reduced) {
    PolyQ f;
    f.add_term(Monomial({{av(1, 1), 1}, {av(i, 2), 1}, {av(j, 1), 1}}), Rational(1));
    if (i == j) {
        f.add_term(Monomial({{av(1, 2), 1}, {av(i, 1), 2}}), Rational(-1));
        f.add_term(Monomial({{av(2, 1), 1}, {av(i, 2), 2}}), Rational(1));
        f.add_term(Monomial({{av(2, 2), 1}, {av(i, 1), 1}, {av(i, 2), 1}}), Rational(-1));
        return f;
    }
    f.add_term(Monomial({{av(1, 2), 1}, {av(i, 1), 1}, {av(j, 1), 1}}), Rational(-1));
    f.add_term(Monomial({{av(2, 1), 1}, {av(i, 2), 1}, {av(j, 2), 1}}), Rational(1));
    if (reduced)
        f.add_term(Monomial({{av(2, 2), 1}, {av(i, 2), 1}, {av(j, 1), 1}}), Rational(-1));
    else
        f.add_term(Monomial({{av(2, 2), 1}, {av(i, 1), 1}, {av(j, 2), 1}}), Rational(-1));
    return f;
}

}  // namespace

std::vector<PolyQ> GB2Basis::all() const {
    std::vector<PolyQ> out = quadrics;
    out.insert(out.end(), cubics.begin(), cubics.end());
    return out;
}

GB2Basis gb_generators(int n, bool reduced) {
    if (n < 3) throw std::invalid_argument("gb_generators needs n >= 3");
    GB2Basis b;
    b.n = n;
    b.reduced = reduced;
    for (int i = 3; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.quadrics.push_back(quadric(i, j));
    for (int i = 3; i <= n; ++i)
        for (int j = i; j <= n; ++j) b.cubics.push_back(cubic(i, j, reduced));
    return b;
}

BuchbergerReport verify_buchberger(int n) {
    const std::vector<PolyQ> basis = gb_generators(n).all();
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    const size_t nthreads = std::clamp<size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<uint8_t> zero(pairs.size(), 0);
    std::vector<std::thread> workers;
    for (size_t w = 0; w < nthreads; ++w) {
        workers.emplace_back([&, w]() {
            for (size_t k = w; k < pairs.size(); k += nthreads) {
                auto [i, j] = pairs[k];
                zero[k] = normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero();
            }
        });
    }
    for (auto& t : workers) t.join();

    BuchbergerReport rep;
    rep.pairs_checked = pairs.size();
    rep.all_reduce_to_zero =
        std::all_of(zero.begin(), zero.end(), [](uint8_t z) { return z != 0; });
    return rep;
}

InitialIdealInfo initial_ideal_and_facets(int n) {
    GB2Basis b = gb_generators(n);
    InitialIdealInfo info;
    for (const auto& f : b.all()) info.generators.push_back(f.leading_monomial());

    FacetComplex& cx = info.complex;
    cx.n = n;
    cx.free_count = n * n - 2 * n + 3;

    cx.support.push_back(av(1, 1));
    for (int i = 3; i <= n; ++i) {
        cx.support.push_back(av(i, 1));
        cx.support.push_back(av(i, 2));
    }

    // Shelling order: first-column facet, the mixed facets, second-column facet.
    std::vector<VarId> first{av(1, 1)};
    for (int i = 3; i <= n; ++i) first.push_back(av(i, 1));
    cx.facets.push_back(first);
    for (int i = 3; i <= n; ++i) {
        std::vector<VarId> f;
        for (int k = 3; k <= i; ++k) f.push_back(av(k, 2));
        for (int k = i; k <= n; ++k) f.push_back(av(k, 1));
        cx.facets.push_back(f);
    }
    std::vector<VarId> last{av(1, 1)};
    for (int i = 3; i <= n; ++i) last.push_back(av(i, 2));
    cx.facets.push_back(last);

    // M must be the intersection of the facet primes <support \ facet>.
    std::vector<Monomial> inter;
    bool started = false;
    info.unmixed = true;
    for (const auto& facet : cx.facets) {
        if (facet.size() != static_cast<size_t>(n - 1)) info.unmixed = false;
        std::vector<Monomial> prime;
        for (VarId v : cx.support)
            if (std::find(facet.begin(), facet.end(), v) == facet.end())
                prime.push_back(Monomial::var(v));
        inter = started ? intersect_monomial_ideals(inter, prime) : minimalize(prime);
        started = true;
    }
    info.intersection_matches = inter == minimalize(info.generators);
    info.codim = static_cast<int>(cx.support.size()) - (n - 1);
    info.degree = static_cast<int>(cx.facets.size());
    return info;
}

Int hilbert_function(int n, int t) {
    if (t < 0) throw std::invalid_argument("negative degree");
    InitialIdealInfo info = initial_ideal_and_facets(n);
    const long free_count = info.complex.free_count;
    Int total = 0;
    for (int a = 0; a <= t; ++a) {
        Int sm = standard_monomial_count(info.generators, info.complex.support, a);
        if (sm == 0) continue;
        total += sm * binomial(t - a + free_count - 1, t - a);
    }
    return total;
}

UniRationalFn hilbert_series_closed(int n) {
    if (n < 3) throw std::invalid_argument("needs n >= 3");
    // n/(1-z)^{n^2-n+2} - (n-1)/(1-z)^{n^2-n+1} - 1/(1-z)^{n^2-2n+4}
    //   + 1/(1-z)^{n^2-2n+3}, over the common denominator (1-z)^{n^2-n+2}.
    UniPoly num = UniPoly::constant(n) - UniPoly::constant(n - 1) * one_minus_z_pow(1) -
                  one_minus_z_pow(n - 2) + one_minus_z_pow(n - 1);
    return {num, one_minus_z_pow(static_cast<unsigned>(n) * n - n + 2)};
}

UniRationalFn hilbert_series_shelling(int n) {
    if (n < 3) throw std::invalid_argument("needs n >= 3");
    UniRationalFn complex_series(UniPoly::linear(1, n - 1), one_minus_z_pow(n - 1));
    UniRationalFn lost_vertex(UniPoly::linear(0, 1), one_minus_z_pow(1));
    UniRationalFn free_factor(UniPoly::constant(1),
                              one_minus_z_pow(static_cast<unsigned>(n) * n - 2 * n + 3));
    return free_factor * (complex_series - lost_vertex);
}

UniPolyQ hilbert_polynomial(int n) {
    if (n < 3) throw std::invalid_argument("needs n >= 3");
    const long nn = static_cast<long>(n) * n;
    UniPolyQ hp = binomial_poly(nn - n + 1).scaled(Rational(n)) -
                  binomial_poly(nn - n).scaled(Rational(n - 1)) - binomial_poly(nn - 2 * n + 3) +
                  binomial_poly(nn - 2 * n + 2);
    return hp;
}

int agreement_threshold(int n, int tmax) {
    UniPolyQ hp = hilbert_polynomial(n);
    int threshold = tmax + 1;
    for (int t = tmax; t >= 0; --t) {
        if (hilbert_function(n, t) != hp.eval(Rational(t)).to_int()) break;
        threshold = t;
    }
    return threshold;
}

bool small_minors_reduce_to_zero(int n) {
    if (n < 4 || n > 7) throw std::invalid_argument("small-minor check runs for n in 4..7");
    const std::vector<PolyQ> basis = gb_generators(n).all();
    PolyMatrixQ sk = small_kalman_matrix(symbolic_matrix(n), 2);
    for (const auto& m : minors(sk, 2))
        if (!normal_form(m, basis).is_zero()) return false;
    return true;
}

}  // namespace kalvar
