#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kalvar/varid.hpp"

namespace kalvar {

/// Power product of matrix variables. Exponents are strictly positive;
/// factors are kept sorted with the highest-ranked variable first, so
/// lexicographic comparison is a single merge walk.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    Monomial(std::initializer_list<Factor> fs) : Monomial(std::vector<Factor>(fs)) {}
    explicit Monomial(std::vector<Factor> fs) {
        for (auto& [v, e] : fs) {
            if (e < 0) throw std::invalid_argument("negative exponent");
            if (e > 0) f_.push_back({v, e});
        }
        std::sort(f_.begin(), f_.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
        for (size_t k = 1; k < f_.size(); ++k)
            if (f_[k].first == f_[k - 1].first) throw std::invalid_argument("repeated variable");
        for (const auto& [v, e] : f_) deg_ += e;
    }

    static Monomial var(VarId v, int e = 1) { return Monomial({{v, e}}); }

    int degree() const { return deg_; }
    bool is_one() const { return f_.empty(); }
    const std::vector<Factor>& factors() const { return f_; }

    int exponent(VarId v) const {
        for (const auto& [w, e] : f_)
            if (w == v) return e;
        return 0;
    }

    bool squarefree() const {
        return std::all_of(f_.begin(), f_.end(), [](const Factor& f) { return f.second == 1; });
    }

    /// Lex comparison under the row-major-descending variable order:
    /// +1 if a > b, 0 if equal, -1 if a < b.
    static int cmp_lex(const Monomial& a, const Monomial& b) {
        size_t ka = 0, kb = 0;
        while (ka < a.f_.size() && kb < b.f_.size()) {
            const auto& [va, ea] = a.f_[ka];
            const auto& [vb, eb] = b.f_[kb];
            if (va != vb) return var_above(va, vb) ? +1 : -1;
            if (ea != eb) return ea > eb ? +1 : -1;
            ++ka, ++kb;
        }
        if (ka < a.f_.size()) return +1;
        if (kb < b.f_.size()) return -1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    bool divides(const Monomial& m) const {
        size_t k = 0;
        for (const auto& [v, e] : f_) {
            while (k < m.f_.size() && m.f_[k].first != v && var_above(m.f_[k].first, v)) ++k;
            if (k >= m.f_.size() || m.f_[k].first != v || m.f_[k].second < e) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return merge(a, b, [](int x, int y) { return x + y; });
    }

    /// Exact quotient; caller guarantees divisibility.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (!b.divides(a)) throw std::invalid_argument("monomial quotient is not exact");
        return merge(a, b, [](int x, int y) { return x - y; });
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        return merge(a, b, [](int x, int y) { return std::max(x, y); });
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        return merge(a, b, [](int x, int y) { return std::min(x, y); });
    }

    bool coprime_with(const Monomial& b) const { return gcd(*this, b).is_one(); }

    std::string str(bool compact = true) const {
        if (f_.empty()) return "1";
        std::string out;
        for (const auto& [v, e] : f_) {
            if (!out.empty()) out += "*";
            out += var_str(v, compact);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    template <class Op>
    static Monomial merge(const Monomial& a, const Monomial& b, Op op) {
        Monomial r;
        size_t ka = 0, kb = 0;
        while (ka < a.f_.size() || kb < b.f_.size()) {
            VarId v;
            int ea = 0, eb = 0;
            bool take_a = kb >= b.f_.size() ||
                          (ka < a.f_.size() && !var_above(b.f_[kb].first, a.f_[ka].first));
            bool take_b = ka >= a.f_.size() ||
                          (kb < b.f_.size() && !var_above(a.f_[ka].first, b.f_[kb].first));
            if (take_a) { v = a.f_[ka].first; ea = a.f_[ka].second; ++ka; }
            if (take_b) { v = b.f_[kb].first; eb = b.f_[kb].second; ++kb; }
            int e = op(ea, eb);
            if (e > 0) {
                r.f_.push_back({v, e});
                r.deg_ += e;
            }
        }
        return r;
    }

    std::vector<Factor> f_;
    int deg_ = 0;
};

/// Comparator placing the lex-greatest monomial first; the term map of a
/// polynomial uses it so begin() is the leading term.
struct MonoLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_lex(a, b) > 0;
    }
};

}  // namespace kalvar
