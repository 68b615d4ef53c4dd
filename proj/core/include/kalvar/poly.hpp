#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kalvar/gfp.hpp"
#include "kalvar/monomial.hpp"
#include "kalvar/rational.hpp"

namespace kalvar {

/// Sparse multivariate polynomial over an exact field K (Rational or GFp).
/// Terms are held lex-descending, so the first entry is the leading term.
/// Zero coefficients are never stored; the zero polynomial is the empty map.
template <class K>
class Poly {
public:
    using TermMap = std::map<Monomial, K, MonoLexGreater>;

    Poly() = default;

    static Poly term(Monomial m, K c) {
        Poly p;
        if (!c.is_zero()) p.t_.emplace(std::move(m), std::move(c));
        return p;
    }

    static Poly constant(K c) { return term(Monomial{}, std::move(c)); }
    static Poly variable(VarId v, const K& one) { return term(Monomial::var(v), one); }

    bool is_zero() const { return t_.empty(); }
    size_t num_terms() const { return t_.size(); }
    const TermMap& terms() const { return t_; }

    /// Maximal total degree over all terms; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }

    const std::pair<const Monomial, K>& leading_term() const {
        if (t_.empty()) throw std::domain_error("zero polynomial has no leading term");
        return *t_.begin();
    }
    const Monomial& leading_monomial() const { return leading_term().first; }
    const K& leading_coeff() const { return leading_term().second; }

    K coeff(const Monomial& m) const {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (t_.empty()) throw std::domain_error("coefficient lookup on zero polynomial needs a field context");
            return t_.begin()->second.zero();
        }
        return it->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const K& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
        return r;
    }

    /// Product with a single term; cheaper than building a Poly for it.
    Poly times_term(const Monomial& m, const K& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [mm, k] : t_) r.t_.emplace(mm * m, k * c);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

    /// Drops every term that involves one of the given variables
    /// (substitution of zero).
    Poly without_vars(const std::vector<VarId>& vars) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            bool hit = false;
            for (VarId v : vars)
                if (m.exponent(v) > 0) { hit = true; break; }
            if (!hit) r.t_.emplace(m, c);
        }
        return r;
    }

    /// Evaluates at scalars of another field; `conv` maps coefficients into
    /// the target field and `at` assigns every variable.
    template <class K2>
    K2 eval(const std::function<K2(VarId)>& at, const std::function<K2(const K&)>& conv,
            const K2& zero) const {
        K2 acc = zero;
        for (const auto& [m, c] : t_) {
            K2 t = conv(c);
            for (const auto& [v, e] : m.factors()) {
                K2 base = at(v);
                for (int k = 0; k < e; ++k) t *= base;
            }
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    TermMap t_;
};

using PolyQ = Poly<Rational>;
using PolyGFp = Poly<GFp>;

inline PolyQ one_like(const PolyQ&) { return PolyQ::constant(Rational(1)); }

/// Evaluation of a rational-coefficient polynomial at a GF(p) point.
inline GFp eval_gfp(const PolyQ& f, const std::function<GFp(VarId)>& at, uint32_t p) {
    return f.eval<GFp>(at, [p](const Rational& c) { return to_gfp(c, p); }, GFp(0, p));
}

inline Rational eval_q(const PolyQ& f, const std::function<Rational(VarId)>& at) {
    return f.eval<Rational>(at, [](const Rational& c) { return c; }, Rational());
}

/// Text form, terms lex-descending: "a31*a42 - a32*a41". Compact variable
/// names (a31) are used when every index is a single digit.
std::string poly_str(const PolyQ& f);
std::string poly_str(const PolyGFp& f);

/// Deterministic order for generator lists: by total degree, then by
/// lex-descending leading monomial.
template <class K>
bool poly_census_order(const Poly<K>& a, const Poly<K>& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
    return Monomial::cmp_lex(a.leading_monomial(), b.leading_monomial()) > 0;
}

}  // namespace kalvar
