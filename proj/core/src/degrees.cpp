#include "kalvar/degrees.hpp"

#include <stdexcept>

#include "kalvar/combinatorics.hpp"

namespace kalvar {

SymSeries expand_degree_series(const StratumSpec& spec) {
    return chern_tangent_series(spec.s, spec.n, spec.s * (spec.d - spec.s));
}

Int degree_schur(const StratumSpec& spec) {
    SchurExpansion e = schur_decompose(expand_degree_series(spec));
    return e.at(Partition::rectangle(spec.d - spec.s, spec.s));
}

Int degree_binomial(const StratumSpec& spec) {
    if (spec.s != 1) throw std::invalid_argument("binomial route needs s = 1");
    return binomial(spec.n, spec.d - 1);
}

Int degree_univariate(const StratumSpec& spec) {
    if (spec.s != spec.d - 1) throw std::invalid_argument("univariate route needs s = d-1");
    UniPoly num = UniPoly::linear(1, 1).pow(static_cast<unsigned>(spec.d));
    UniRationalFn f(num, one_minus_z_pow(static_cast<unsigned>(spec.n - spec.d)));
    return series_coefficients(f, spec.d - 1).back();
}

Int degree_koutschan(int d, long n) {
    if (d < 3) throw std::invalid_argument("closed form needs d >= 3");
    if (n < d) throw std::invalid_argument("needs n >= d");

    Rational sum;
    for (int k = 0; k <= d - 2; ++k) {
        Rational term = pochhammer(Rational(Int(1), Int(2)) - Rational(k), d - 1);
        term *= pochhammer(Rational(n + 1 - k), k);
        term *= pochhammer(Rational(d + n - 2 * k), k);
        term /= Rational(factorial(2 * k));
        sum += term;
    }
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * d - 3));
    Rational result = Rational(two_pow, factorial(d - 1)) * sum;
    if (d % 2 == 1) result = -result;
    if (!result.is_integer() || result.sign() < 0)
        throw std::domain_error("closed form did not produce a nonnegative integer");
    return result.to_int();
}

Int grassmannian_degree(int s, int d) {
    if (!(1 <= s && s <= d)) throw std::invalid_argument("need 1 <= s <= d");
    Int num = factorial(static_cast<long>(s) * (d - s));
    for (int i = 1; i < s; ++i) num *= factorial(i);
    Int den = 1;
    for (int k = d - s; k <= d - 1; ++k) den *= factorial(k);
    Rational r(num, den);
    return r.to_int();
}

Rational asymptotic_leading(int s, int d) {
    return Rational(grassmannian_degree(s, d), factorial(static_cast<long>(s) * (d - s)));
}

Int degree_chern_route(const StratumSpec& spec) {
    const int s = spec.s, d = spec.d, n = spec.n;
    const int cap = s * (d - s);
    SymSeries top = expand_degree_series(spec).homogeneous_part(cap);
    SchurExpansion slice = schur_decompose(top);

    const Partition full_box = Partition::rectangle(n - s, s);
    Int total = 0;
    for (const auto& [lambda, c] : slice.coeff) {
        // e_s^{n-d} appends n-d full columns; partitions leaving the
        // s x (n-s) box die in the Grassmannian.
        Partition shifted = lambda.shifted(s, n - d);
        if (shifted.part(0) > n - s) continue;
        if (shifted == full_box) total += c;
    }
    return total;
}

PolynomialityReport verify_polynomiality(int s, int d, long n_min, long n_max) {
    PolynomialityReport rep;
    rep.expected_order = s * (d - s);
    if (n_max - n_min + 1 < rep.expected_order + 2)
        throw std::invalid_argument("window shorter than s(d-s)+2");

    for (long n = n_min; n <= n_max; ++n)
        rep.degrees.push_back(degree_schur(StratumSpec(s, d, static_cast<int>(n))));

    std::vector<Int> diff = rep.degrees;
    for (int order = 0; order < rep.expected_order; ++order) {
        std::vector<Int> next;
        for (size_t k = 0; k + 1 < diff.size(); ++k) next.push_back(diff[k + 1] - diff[k]);
        diff = std::move(next);
    }
    // diff now holds the order-s(d-s) differences: constant for a degree
    // s(d-s) polynomial, with value lead * (s(d-s))!.
    rep.differences_vanish = true;
    for (size_t k = 0; k + 1 < diff.size(); ++k)
        if (diff[k + 1] != diff[k]) rep.differences_vanish = false;
    rep.recovered_leading = Rational(diff.at(0), factorial(rep.expected_order));
    rep.leading_matches =
        rep.differences_vanish && rep.recovered_leading == asymptotic_leading(s, d);
    return rep;
}

std::string BiDegree::str() const {
    const size_t deg = coeffs.size() - 1;
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Int mag = abs(coeffs[k]);
        if (out.empty()) {
            if (coeffs[k] < 0) out += "-";
        } else {
            out += coeffs[k] < 0 ? " - " : " + ";
        }
        std::string term;
        if (mag != 1 || deg == 0) term += mag.get_str();
        size_t e1 = deg - k, e2 = k;
        auto append_var = [&](const std::string& v, size_t e) {
            if (e == 0) return;
            if (!term.empty() && term.back() != '*') term += "*";
            term += v;
            if (e > 1) term += "^" + std::to_string(e);
        };
        append_var("t1", e1);
        append_var("t2", e2);
        out += term;
    }
    return out.empty() ? "0" : out;
}

MultidegreePair multidegree_incidence(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    MultidegreePair out;
    out.incidence.coeffs.assign(static_cast<size_t>(n), Int(1));

    out.substituted.coeffs.assign(static_cast<size_t>(n), Int(0));
    for (int d = 1; d <= n; ++d)
        for (int k = 0; k <= n - d; ++k)
            // (t1+t2)^{n-d} t2^{d-1} contributes C(n-d,k) on t2^{k+d-1}.
            out.substituted.coeffs[static_cast<size_t>(k + d - 1)] += binomial(n - d, k);

    out.matches_binomial = true;
    for (int k = 0; k < n; ++k)
        if (out.substituted.coeffs[static_cast<size_t>(k)] != binomial(n, k))
            out.matches_binomial = false;
    return out;
}

DegreeAgreement degree_all_methods(const StratumSpec& spec) {
    DegreeAgreement out;
    out.methods["schur"] = degree_schur(spec);
    if (spec.s == 1) out.methods["binomial"] = degree_binomial(spec);
    if (spec.s == spec.d - 1) out.methods["univariate"] = degree_univariate(spec);
    if (spec.s == 2 && spec.d >= 3) out.methods["koutschan"] = degree_koutschan(spec.d, spec.n);
    out.degree = out.methods.at("schur");
    out.agree = true;
    for (const auto& [name, v] : out.methods)
        if (v != out.degree) out.agree = false;
    return out;
}

}  // namespace kalvar
