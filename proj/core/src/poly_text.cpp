#include "kalvar/poly.hpp"

namespace kalvar {
namespace {

bool all_single_digit(const Monomial& m) {
    for (const auto& [v, e] : m.factors())
        if (v.i > 9 || v.j > 9) return false;
    return true;
}

template <class K>
std::string render(const Poly<K>& f, const std::function<std::string(const K&)>& coeff_str,
                   const std::function<bool(const K&)>& is_neg,
                   const std::function<K(const K&)>& abs_val) {
    if (f.is_zero()) return "0";
    bool compact = true;
    for (const auto& [m, c] : f.terms())
        if (!all_single_digit(m)) { compact = false; break; }

    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool neg = is_neg(c);
        K mag = neg ? abs_val(c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = coeff_str(mag);
        if (m.is_one()) {
            out += cs;
        } else if (cs == "1") {
            out += m.str(compact);
        } else {
            out += cs + "*" + m.str(compact);
        }
    }
    return out;
}

}  // namespace

std::string poly_str(const PolyQ& f) {
    return render<Rational>(
        f, [](const Rational& c) { return c.str(); },
        [](const Rational& c) { return c.sign() < 0; }, [](const Rational& c) { return -c; });
}

std::string poly_str(const PolyGFp& f) {
    // GF(p) values are already reduced to [0, p); no sign splitting.
    return render<GFp>(
        f, [](const GFp& c) { return c.str(); }, [](const GFp&) { return false; },
        [](const GFp& c) { return c; });
}

}  // namespace kalvar
