#pragma once

#include <string>
#include <vector>

#include "kalvar/rational.hpp"

namespace kalvar {

/// Dense univariate polynomial with integer coefficients, c[k] on z^k.
/// Trailing zeros are trimmed; the zero polynomial is the empty vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
    static UniPoly constant(Int v) { return UniPoly({std::move(v)}); }
    /// (a + b z)
    static UniPoly linear(Int a, Int b) { return UniPoly({std::move(a), std::move(b)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly pow(unsigned e) const;

    /// Content (gcd of coefficients), nonnegative; 0 for the zero polynomial.
    Int content() const;

    std::string str(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// Dense univariate polynomial with rational coefficients (Hilbert
/// polynomials in t).
class UniPolyQ {
public:
    UniPolyQ() = default;
    explicit UniPolyQ(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UniPolyQ from_int(const UniPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational();
    }
    Rational leading_coeff() const { return c_.empty() ? Rational() : c_.back(); }

    Rational eval(const Rational& t) const;

    friend UniPolyQ operator+(const UniPolyQ& a, const UniPolyQ& b);
    friend UniPolyQ operator-(const UniPolyQ& a, const UniPolyQ& b);
    friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b);
    UniPolyQ scaled(const Rational& c) const;
    friend bool operator==(const UniPolyQ& a, const UniPolyQ& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Quotient of two integer polynomials, stored content-normalized with the
/// lowest nonzero denominator coefficient positive.
class UniRationalFn {
public:
    UniRationalFn(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    friend UniRationalFn operator+(const UniRationalFn& a, const UniRationalFn& b);
    friend UniRationalFn operator-(const UniRationalFn& a, const UniRationalFn& b);
    friend UniRationalFn operator*(const UniRationalFn& a, const UniRationalFn& b);

    /// Equality as rational functions, by cross multiplication.
    friend bool operator==(const UniRationalFn& a, const UniRationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str(const std::string& var = "z") const;

private:
    UniPoly num_, den_;
};

/// Exact power-series coefficients of f through the given degree. Requires
/// den(0) != 0; all expansion coefficients must be integers.
std::vector<Int> series_coefficients(const UniRationalFn& f, int upto);

/// (1 - z)^e as an integer polynomial.
UniPoly one_minus_z_pow(unsigned e);

/// Binomial polynomial C(t + r, r) in t.
UniPolyQ binomial_poly(long r);

}  // namespace kalvar
