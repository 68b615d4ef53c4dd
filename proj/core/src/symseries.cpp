#include "kalvar/symseries.hpp"

#include <numeric>
#include <stdexcept>

#include "kalvar/combinatorics.hpp"

namespace kalvar {

namespace {

int total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

ExpVec zero_exp() {
    ExpVec e{};
    e.fill(0);
    return e;
}

}  // namespace

SymSeries::SymSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {
    if (nvars < 0 || static_cast<size_t>(nvars) > kMaxSymVars)
        throw std::invalid_argument("series supports up to 16 variables");
    if (cap < 0) throw std::invalid_argument("negative truncation cap");
    if (cap > 255) throw std::invalid_argument("truncation cap exceeds exponent storage");
}

SymSeries SymSeries::constant(int nvars, int cap, Int v) {
    SymSeries s(nvars, cap);
    s.add_term(zero_exp(), v);
    return s;
}

SymSeries SymSeries::one_plus_xi_pow(int nvars, int cap, int var, long n) {
    SymSeries s(nvars, cap);
    for (int k = 0; k <= cap; ++k) {
        Int c = binomial(n, k);
        if (c == 0) continue;
        ExpVec e = zero_exp();
        e[var] = static_cast<uint8_t>(k);
        s.add_term(e, c);
    }
    return s;
}

SymSeries SymSeries::difference(int nvars, int cap, int vi, int vj) {
    SymSeries s(nvars, cap);
    if (cap >= 1) {
        ExpVec e = zero_exp();
        e[vi] = 1;
        s.add_term(e, 1);
        e[vi] = 0;
        e[vj] = 1;
        s.add_term(e, -1);
    }
    return s;
}

SymSeries SymSeries::factor_inverse(int nvars, int cap, int vi, int vj) {
    SymSeries diff = difference(nvars, cap, vi, vj);
    SymSeries acc = constant(nvars, cap, 1);
    SymSeries power = constant(nvars, cap, 1);
    for (int k = 1; k <= cap; ++k) {
        power = power * diff;
        acc = (k % 2 == 0) ? acc + power : acc - power;
    }
    return acc;
}

SymSeries SymSeries::even_geometric(int nvars, int cap, int vi, int vj) {
    SymSeries diff = difference(nvars, cap, vi, vj);
    SymSeries sq = diff * diff;
    SymSeries acc = constant(nvars, cap, 1);
    SymSeries power = constant(nvars, cap, 1);
    for (int k = 1; 2 * k <= cap; ++k) {
        power = power * sq;
        acc = acc + power;
    }
    return acc;
}

void SymSeries::add_term(const ExpVec& e, const Int& v) {
    if (v == 0 || total_degree(e) > cap_) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, v);
    } else {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

Int SymSeries::coeff(const ExpVec& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
    SymSeries r = a;
    for (const auto& [e, v] : b.c_) r.add_term(e, v);
    return r;
}

SymSeries operator-(const SymSeries& a, const SymSeries& b) {
    SymSeries r = a;
    for (const auto& [e, v] : b.c_) r.add_term(e, -v);
    return r;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
    SymSeries r(a.nvars_, std::min(a.cap_, b.cap_));
    for (const auto& [ea, va] : a.c_) {
        int da = total_degree(ea);
        for (const auto& [eb, vb] : b.c_) {
            if (da + total_degree(eb) > r.cap_) continue;
            ExpVec e;
            for (size_t k = 0; k < kMaxSymVars; ++k) e[k] = static_cast<uint8_t>(ea[k] + eb[k]);
            r.add_term(e, va * vb);
        }
    }
    return r;
}

bool operator==(const SymSeries& a, const SymSeries& b) { return a.c_ == b.c_; }

SymSeries SymSeries::truncated(int new_cap) const {
    SymSeries r(nvars_, new_cap);
    for (const auto& [e, v] : c_) r.add_term(e, v);
    return r;
}

SymSeries SymSeries::homogeneous_part(int deg) const {
    SymSeries r(nvars_, cap_);
    for (const auto& [e, v] : c_)
        if (total_degree(e) == deg) r.add_term(e, v);
    return r;
}

SymSeries SymSeries::permuted(const std::vector<int>& perm) const {
    if (perm.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("permutation size mismatch");
    SymSeries r(nvars_, cap_);
    for (const auto& [e, v] : c_) {
        ExpVec f = zero_exp();
        for (int k = 0; k < nvars_; ++k) f[perm[k]] = e[k];
        r.add_term(f, v);
    }
    return r;
}

bool SymSeries::is_symmetric() const {
    std::vector<int> perm(nvars_);
    for (int k = 0; k < nvars_; ++k) perm[k] = k;
    for (int k = 0; k + 1 < nvars_; ++k) {
        std::swap(perm[k], perm[k + 1]);
        if (!(permuted(perm) == *this)) return false;
        std::swap(perm[k], perm[k + 1]);
    }
    return true;
}

SymSeries chern_tangent_series(int s, long n, int cap) {
    if (s < 1) throw std::invalid_argument("need at least one variable");
    SymSeries acc = SymSeries::constant(s, cap, 1);
    for (int i = 0; i < s; ++i) acc = acc * SymSeries::one_plus_xi_pow(s, cap, i, n);
    // The i = j denominator factors are 1. The (i,j)/(j,i) inverses are
    // combined (with truncation) before entering the running product, which
    // keeps the accumulated term count down without changing the result.
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            acc = acc * (SymSeries::factor_inverse(s, cap, i, j) *
                         SymSeries::factor_inverse(s, cap, j, i));
    return acc;
}

SymSeries chern_series_s2(long n, int cap) {
    SymSeries num =
        SymSeries::one_plus_xi_pow(2, cap, 0, n) * SymSeries::one_plus_xi_pow(2, cap, 1, n);
    return num * SymSeries::even_geometric(2, cap, 0, 1);
}

}  // namespace kalvar
