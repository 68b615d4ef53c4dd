#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace kalvar {

/// Arbitrary-precision integer.
using Int = mpz_class;

inline std::string int_str(const Int& v) { return v.get_str(); }

inline Int int_parse(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}    // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(int_parse(s));
        return Rational(int_parse(s.substr(0, slash)), int_parse(s.substr(slash + 1)));
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Int to_int() const {
        if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
        return v_.get_num();
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("zero has no multiplicative inverse");
        return Rational(v_.get_den(), v_.get_num());
    }

    /// Same-field constants; mirrors the GFp interface so templated code can
    /// manufacture scalars from an existing value.
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational zero_like(const Rational& x) { return x.zero(); }
inline Rational one_like(const Rational& x) { return x.one(); }

}  // namespace kalvar
