#include "kalvar/unipoly.hpp"

#include <stdexcept>

#include "kalvar/combinatorics.hpp"

namespace kalvar {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    std::vector<Int> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

Int UniPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) {
        Int a;
        mpz_gcd(a.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = a;
    }
    return g;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Int mag = abs(c_[k]);
        bool neg = c_[k] < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string term;
        if (k == 0) {
            term = mag.get_str();
        } else {
            term = (mag == 1) ? "" : mag.get_str() + "*";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out;
}

UniPolyQ UniPolyQ::from_int(const UniPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return UniPolyQ(std::move(c));
}

Rational UniPolyQ::eval(const Rational& t) const {
    Rational acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
}

UniPolyQ operator+(const UniPolyQ& a, const UniPolyQ& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return UniPolyQ(std::move(c));
}

UniPolyQ operator-(const UniPolyQ& a, const UniPolyQ& b) { return a + b.scaled(Rational(-1)); }

UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return UniPolyQ();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPolyQ(std::move(c));
}

UniPolyQ UniPolyQ::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) c[k] = c_[k] * s;
    return UniPolyQ(std::move(c));
}

UniRationalFn::UniRationalFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    Int cn = num_.content(), cd = den_.content();
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        auto divide_out = [&](const UniPoly& p) {
            std::vector<Int> c;
            c.reserve(p.coeffs().size());
            for (const auto& v : p.coeffs()) c.push_back(v / g);
            return UniPoly(std::move(c));
        };
        num_ = divide_out(num_);
        den_ = divide_out(den_);
    }
    // Sign convention: first nonzero denominator coefficient positive.
    for (const auto& c : den_.coeffs()) {
        if (c == 0) continue;
        if (c < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        break;
    }
}

UniRationalFn operator+(const UniRationalFn& a, const UniRationalFn& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

UniRationalFn operator-(const UniRationalFn& a, const UniRationalFn& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

UniRationalFn operator*(const UniRationalFn& a, const UniRationalFn& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string UniRationalFn::str(const std::string& var) const {
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::vector<Int> series_coefficients(const UniRationalFn& f, int upto) {
    if (upto < 0) throw std::invalid_argument("negative truncation degree");
    const Int d0 = f.den().coeff(0);
    if (d0 == 0) throw std::domain_error("no power-series expansion at 0");

    // c_k solves den * c = num: c_k = (num_k - sum_{j>=1} den_j c_{k-j}) / den_0.
    std::vector<Rational> c(static_cast<size_t>(upto) + 1);
    for (int k = 0; k <= upto; ++k) {
        Rational acc(f.num().coeff(k));
        for (int j = 1; j <= std::min(k, f.den().degree()); ++j)
            acc -= Rational(f.den().coeff(j)) * c[k - j];
        c[k] = acc / Rational(d0);
    }
    std::vector<Int> out;
    out.reserve(c.size());
    for (const auto& v : c) {
        if (!v.is_integer()) throw std::domain_error("series expansion is not integral");
        out.push_back(v.num());
    }
    return out;
}

UniPoly one_minus_z_pow(unsigned e) { return UniPoly::linear(1, -1).pow(e); }

UniPolyQ binomial_poly(long r) {
    if (r < 0) throw std::invalid_argument("binomial_poly needs r >= 0");
    // prod_{i=1}^{r} (t + i), then divide by r!.
    UniPoly p = UniPoly::constant(1);
    for (long i = 1; i <= r; ++i) p = p * UniPoly::linear(i, 1);
    return UniPolyQ::from_int(p).scaled(Rational(Int(1), factorial(r)));
}

}  // namespace kalvar
