#include "kalvar/schur.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace kalvar {

SymSeries vandermonde(int nvars, int cap) {
    SymSeries v = SymSeries::constant(nvars, cap, 1);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) v = v * SymSeries::difference(nvars, cap, i, j);
    return v;
}

SchurExpansion schur_decompose(const SymSeries& f) {
    if (!f.is_symmetric()) throw std::invalid_argument("schur_decompose needs a symmetric series");
    const int s = f.nvars();
    const int cap = f.cap();
    const int vdeg = s * (s - 1) / 2;

    // The alternant is homogeneous of degree C(s,2), so the product is
    // complete through cap + C(s,2); no truncation error enters.
    SymSeries fv = f.truncated(cap + vdeg) * vandermonde(s, cap + vdeg);

    SchurExpansion out;
    out.nvars = s;
    out.complete_through = cap;
    for (const auto& [e, v] : fv.terms()) {
        bool dominant = true;
        for (int k = 0; k + 1 < s; ++k)
            if (e[k] <= e[k + 1]) { dominant = false; break; }
        if (!dominant) continue;
        std::vector<int> parts;
        int weight = 0;
        for (int k = 0; k < s; ++k) {
            int part = e[k] - (s - 1 - k);
            if (part < 0) throw std::logic_error("dominant exponent below staircase");
            if (part > 0) parts.push_back(part);
            weight += part;
        }
        if (weight > cap) continue;
        out.coeff[Partition(std::move(parts))] = v;
    }
    return out;
}

SymSeries schur_polynomial(const Partition& lambda, int nvars, int cap) {
    if (static_cast<int>(lambda.length()) > nvars)
        return SymSeries(nvars, cap);  // no column-strict filling exists

    SymSeries out(nvars, cap);
    const auto& parts = lambda.parts();
    std::vector<std::vector<int>> fill(parts.size());
    for (size_t r = 0; r < parts.size(); ++r) fill[r].assign(parts[r], 0);

    // Row-major backtracking over semistandard fillings with entries 1..nvars.
    std::function<void(size_t, size_t)> place = [&](size_t r, size_t c) {
        if (r == fill.size()) {
            ExpVec e{};
            e.fill(0);
            for (const auto& row : fill)
                for (int x : row) ++e[x - 1];
            out.add_term(e, 1);
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc >= fill[r].size()) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int x = lo; x <= nvars; ++x) {
            fill[r][c] = x;
            place(nr, nc);
        }
    };
    if (lambda.weight() == 0)
        return SymSeries::constant(nvars, cap, 1);
    if (lambda.weight() <= cap) place(0, 0);
    return out;
}

}  // namespace kalvar
