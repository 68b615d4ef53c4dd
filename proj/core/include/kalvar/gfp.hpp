#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "kalvar/rational.hpp"

namespace kalvar {

/// Element of the prime field GF(p), p < 2^31. The modulus travels with the
/// value; binary operations require matching moduli.
class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(int64_t v, uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("GF(p) modulus must be >= 2");
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<uint32_t>(r);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    std::string str() const { return std::to_string(v_); }

    GFp zero() const { return GFp(0, p_); }
    GFp one() const { return GFp(1, p_); }

    GFp inverse() const {
        if (v_ == 0) throw std::domain_error("zero has no multiplicative inverse in GF(p)");
        // Extended Euclid on (p, v).
        int64_t a = p_, b = v_, x0 = 0, x1 = 1;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        assert(a == 1);
        return GFp(x0, p_);
    }

    friend GFp operator+(const GFp& a, const GFp& b) {
        assert(a.p_ == b.p_);
        uint64_t s = static_cast<uint64_t>(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return from_reduced(static_cast<uint32_t>(s), a.p_);
    }
    friend GFp operator-(const GFp& a, const GFp& b) {
        assert(a.p_ == b.p_);
        int64_t s = static_cast<int64_t>(a.v_) - b.v_;
        if (s < 0) s += a.p_;
        return from_reduced(static_cast<uint32_t>(s), a.p_);
    }
    friend GFp operator*(const GFp& a, const GFp& b) {
        assert(a.p_ == b.p_);
        uint64_t s = static_cast<uint64_t>(a.v_) * b.v_ % a.p_;
        return from_reduced(static_cast<uint32_t>(s), a.p_);
    }
    friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }
    GFp operator-() const { return v_ == 0 ? *this : from_reduced(p_ - v_, p_); }
    GFp& operator+=(const GFp& o) { *this = *this + o; return *this; }
    GFp& operator-=(const GFp& o) { *this = *this - o; return *this; }
    GFp& operator*=(const GFp& o) { *this = *this * o; return *this; }
    GFp& operator/=(const GFp& o) { *this = *this / o; return *this; }

    friend bool operator==(const GFp& a, const GFp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

private:
    static GFp from_reduced(uint32_t v, uint32_t p) {
        GFp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    uint32_t v_;
    uint32_t p_;
};

inline GFp zero_like(const GFp& x) { return x.zero(); }
inline GFp one_like(const GFp& x) { return x.one(); }

/// Image of an exact rational in GF(p); throws when the denominator
/// vanishes mod p.
inline GFp to_gfp(const Rational& q, uint32_t p) {
    Int num = q.num() % p;
    Int den = q.den() % p;
    GFp d(den.get_si(), p);
    if (d.is_zero()) throw std::domain_error("denominator vanishes mod " + std::to_string(p));
    return GFp(num.get_si(), p) * d.inverse();
}

}  // namespace kalvar
