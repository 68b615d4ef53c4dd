#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "kalvar/rational.hpp"

namespace kalvar {

/// Exponent vector for up to 16 Chern-root variables x_1..x_s.
using ExpVec = std::array<uint8_t, 16>;
constexpr size_t kMaxSymVars = 16;

/// Polynomial in x_1..x_s truncated at a fixed total degree: every
/// operation discards terms above the cap. Coefficients are exact integers
/// (the series handled here have no denominators).
class SymSeries {
public:
    SymSeries(int nvars, int cap);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<ExpVec, Int>& terms() const { return c_; }

    static SymSeries constant(int nvars, int cap, Int v);
    /// (1 + x_i)^n truncated at the cap.
    static SymSeries one_plus_xi_pow(int nvars, int cap, int var, long n);
    /// sum_{k<=cap} (-1)^k (x_i - x_j)^k: the inverse of 1 + (x_i - x_j).
    static SymSeries factor_inverse(int nvars, int cap, int vi, int vj);
    /// sum_{2k<=cap} (x_i - x_j)^{2k}: the inverse of 1 - (x_i - x_j)^2.
    static SymSeries even_geometric(int nvars, int cap, int vi, int vj);
    /// x_i - x_j.
    static SymSeries difference(int nvars, int cap, int vi, int vj);

    void add_term(const ExpVec& e, const Int& v);
    Int coeff(const ExpVec& e) const;
    bool is_zero() const { return c_.empty(); }

    friend SymSeries operator+(const SymSeries& a, const SymSeries& b);
    friend SymSeries operator-(const SymSeries& a, const SymSeries& b);
    friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
    friend bool operator==(const SymSeries& a, const SymSeries& b);

    /// Same terms under a different truncation cap (dropping what no longer fits).
    SymSeries truncated(int new_cap) const;

    /// Only the terms of one total degree.
    SymSeries homogeneous_part(int deg) const;

    /// Coefficient-wise image under a permutation of the variables.
    SymSeries permuted(const std::vector<int>& perm) const;

    /// Invariance under all adjacent transpositions (hence under S_s).
    bool is_symmetric() const;

private:
    int nvars_;
    int cap_;
    std::map<ExpVec, Int> c_;
};

/// The rank-s tangent-bundle Chern series prod_i (1+x_i)^n divided by
/// prod_{i != j} (1+(x_i-x_j)), expanded through total degree `cap`: every
/// denominator factor becomes its geometric series and the factors are
/// multiplied in, truncating after each product.
SymSeries chern_tangent_series(int s, long n, int cap);

/// Independent s=2 route through the closed Chern polynomial
/// (1+x1)^n (1+x2)^n / (1-(x1-x2)^2): the denominator is inverted as a
/// single even geometric series.
SymSeries chern_series_s2(long n, int cap);

}  // namespace kalvar
