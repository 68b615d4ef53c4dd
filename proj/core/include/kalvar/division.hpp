#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "kalvar/poly.hpp"

namespace kalvar {

template <class K>
struct DivisionResult {
    std::vector<Poly<K>> quotients;  // one per divisor, in input order
    Poly<K> remainder;
};

/// Multivariate division of f by the ordered list G. Deterministic: the
/// current leading term of the work polynomial is reduced first, divisors
/// are tried in list order. Guarantees f = sum q_i g_i + r with no term of
/// r divisible by any leading monomial of G.
template <class K>
DivisionResult<K> divide(const Poly<K>& f, std::span<const Poly<K>> G) {
    for (const auto& g : G)
        if (g.is_zero()) throw std::invalid_argument("division by a zero polynomial");

    DivisionResult<K> out;
    out.quotients.assign(G.size(), Poly<K>{});
    Poly<K> w = f;
    while (!w.is_zero()) {
        const auto& [m, c] = w.leading_term();
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            const auto& [gm, gc] = G[k].leading_term();
            if (gm.divides(m)) {
                Monomial qm = m / gm;
                K qc = c / gc;
                out.quotients[k].add_term(qm, qc);
                w -= G[k].times_term(qm, qc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.remainder.add_term(m, c);
            w -= Poly<K>::term(m, c);
        }
    }
    return out;
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, std::span<const Poly<K>> G) {
    return divide(f, G).remainder;
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& G) {
    return divide(f, std::span<const Poly<K>>(G)).remainder;
}

/// S-polynomial (lcm/lt f) f - (lcm/lt g) g, with both sides scaled monic
/// so the leading terms cancel exactly.
template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero polynomial");
    const auto& [fm, fc] = f.leading_term();
    const auto& [gm, gc] = g.leading_term();
    Monomial l = lcm(fm, gm);
    return f.times_term(l / fm, fc.inverse()) - g.times_term(l / gm, gc.inverse());
}

}  // namespace kalvar
