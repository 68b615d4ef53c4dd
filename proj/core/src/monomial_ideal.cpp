#include "kalvar/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kalvar {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return Monomial::cmp_lex(a, b) > 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool covered = std::any_of(out.begin(), out.end(),
                                   [&](const Monomial& g) { return g.divides(m); });
        if (!covered) out.push_back(m);
    }
    return out;
}

std::vector<Monomial> intersect_monomial_ideals(const std::vector<Monomial>& a,
                                                const std::vector<Monomial>& b) {
    std::vector<Monomial> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& ma : a)
        for (const auto& mb : b) prods.push_back(lcm(ma, mb));
    return minimalize(std::move(prods));
}

Int standard_monomial_count(const std::vector<Monomial>& leading_monomials,
                            const std::vector<VarId>& support_vars, int t) {
    if (t < 0) throw std::invalid_argument("negative degree");
    const size_t k = support_vars.size();

    // Generators as exponent vectors over the support; every variable of a
    // generator must be listed in the support.
    std::vector<std::vector<int>> gens;
    for (const auto& m : leading_monomials) {
        std::vector<int> e(k, 0);
        int placed = 0;
        for (size_t v = 0; v < k; ++v) {
            e[v] = m.exponent(support_vars[v]);
            placed += e[v];
        }
        if (placed != m.degree())
            throw std::invalid_argument("support variables do not cover generator " + m.str());
        gens.push_back(std::move(e));
    }

    Int count = 0;
    std::vector<int> e(k, 0);
    // Odometer over exponent vectors summing to t.
    std::function<void(size_t, int)> walk = [&](size_t pos, int rem) {
        if (pos + 1 == k || k == 0) {
            if (k == 0) {
                if (rem != 0) return;
            } else {
                e[pos] = rem;
            }
            bool standard = true;
            for (const auto& g : gens) {
                bool div = true;
                for (size_t v = 0; v < k; ++v)
                    if (e[v] < g[v]) { div = false; break; }
                if (div) { standard = false; break; }
            }
            if (standard) ++count;
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            e[pos] = x;
            walk(pos + 1, rem - x);
        }
    };
    if (k == 0) return t == 0 ? 1 : 0;
    walk(0, t);
    return count;
}

}  // namespace kalvar
