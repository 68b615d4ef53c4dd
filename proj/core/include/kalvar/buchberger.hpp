#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "kalvar/division.hpp"
#include "kalvar/poly.hpp"

namespace kalvar {

struct BuchbergerBudget {
    size_t max_pairs = 50000;
    int max_poly_degree = 30;
};

enum class CompletionStatus { complete, budget_exceeded };

template <class K>
struct CompletionResult {
    std::vector<Poly<K>> basis;
    CompletionStatus status = CompletionStatus::complete;
    size_t pairs_processed = 0;
};

namespace detail {

/// Pair queue entry for the normal selection strategy: minimal lcm degree
/// first, ties by lex on the lcm, then by generator indices.
struct PairKey {
    int deg;
    Monomial l;
    size_t i, j;

    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        int c = Monomial::cmp_lex(l, o.l);
        if (c != 0) return c < 0;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace detail

/// Reduces every S-pair of G against G; used both for certifying a claimed
/// Groebner basis and for the closure property test on completed bases.
template <class K>
std::pair<size_t, bool> check_all_spairs(std::span<const Poly<K>> G) {
    size_t checked = 0;
    bool all_zero = true;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            ++checked;
            if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) all_zero = false;
        }
    return {checked, all_zero};
}

/// Inter-reduction of a Groebner basis to the unique reduced one: drop
/// elements whose leading monomial is divisible by another's, then reduce
/// each tail against the rest and scale monic.
template <class K>
std::vector<Poly<K>> reduce_basis(std::vector<Poly<K>> G) {
    std::vector<Poly<K>> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = G[i].leading_monomial();
            const Monomial& mj = G[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Poly<K>> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<K> r = normal_form(minimal[i], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), poly_census_order<K>);
    return out;
}

/// Buchberger completion with the normal pair-selection strategy and the
/// coprime-lcm criterion. Stops with status budget_exceeded (partial basis
/// returned) when either budget limit is hit.
template <class K>
CompletionResult<K> buchberger_complete(std::span<const Poly<K>> gens,
                                        const BuchbergerBudget& budget = {}) {
    for (const auto& g : gens)
        if (g.is_zero()) throw std::invalid_argument("zero generator");

    CompletionResult<K> res;
    std::vector<Poly<K>>& basis = res.basis;
    for (const auto& g : gens) basis.push_back(g.monic());

    std::set<detail::PairKey> queue;
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            Monomial l = lcm(basis[i].leading_monomial(), basis[k].leading_monomial());
            queue.insert({l.degree(), l, i, k});
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        if (res.pairs_processed >= budget.max_pairs) {
            res.status = CompletionStatus::budget_exceeded;
            return res;
        }
        auto key = *queue.begin();
        queue.erase(queue.begin());
        ++res.pairs_processed;

        const Poly<K>& f = basis[key.i];
        const Poly<K>& g = basis[key.j];
        if (f.leading_monomial().coprime_with(g.leading_monomial())) continue;

        Poly<K> r = normal_form(s_polynomial(f, g), basis);
        if (r.is_zero()) continue;
        if (r.degree() > budget.max_poly_degree) {
            res.status = CompletionStatus::budget_exceeded;
            return res;
        }
        basis.push_back(r.monic());
        push_pairs(basis.size() - 1);
    }

    res.basis = reduce_basis(std::move(res.basis));
    res.status = CompletionStatus::complete;
    return res;
}

template <class K>
CompletionResult<K> buchberger_complete(const std::vector<Poly<K>>& gens,
                                        const BuchbergerBudget& budget = {}) {
    return buchberger_complete(std::span<const Poly<K>>(gens), budget);
}

}  // namespace kalvar
