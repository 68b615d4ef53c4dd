#include "kalvar/kalman.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace kalvar {

PolyMatrixQ symbolic_matrix(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return PolyMatrixQ::from(n, n, [&](size_t r, size_t c) {
        return PolyQ::variable({static_cast<uint16_t>(r + 1), static_cast<uint16_t>(c + 1)},
                               Rational(1));
    });
}

PolyMatrixQ reduced_kalman_matrix(int d, int n) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("d out of range (1 <= d <= n-1)");
    return reduced_kalman_matrix(symbolic_matrix(n), d);
}

MinorCache::MinorCache(const PolyMatrixQ& m) : m_(m) {
    if (m.rows() > 63 || m.cols() > 63) throw std::invalid_argument("matrix too large for minors");
}

PolyQ MinorCache::determinant(const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor must be square");
    if (rows.size() > 9) throw std::invalid_argument("minors capped at 9 x 9");
    uint64_t rm = 0, cm = 0;
    for (size_t r : rows) rm |= uint64_t(1) << r;
    for (size_t c : cols) cm |= uint64_t(1) << c;
    if (std::popcount(rm) != rows.size() || std::popcount(cm) != cols.size())
        throw std::invalid_argument("repeated row or column index");
    return det_masked(rm, cm);
}

PolyQ MinorCache::det_masked(uint64_t rowmask, uint64_t colmask) {
    if (rowmask == 0) return PolyQ::constant(Rational(1));
    auto it = cache_.find({rowmask, colmask});
    if (it != cache_.end()) return it->second;

    std::vector<size_t> rows, cols;
    for (size_t r = 0; r < m_.rows(); ++r)
        if (rowmask >> r & 1) rows.push_back(r);
    for (size_t c = 0; c < m_.cols(); ++c)
        if (colmask >> c & 1) cols.push_back(c);

    // Expand along the row with the fewest nonzero entries.
    size_t best = 0, best_nonzero = cols.size() + 1;
    for (size_t k = 0; k < rows.size(); ++k) {
        size_t nz = 0;
        for (size_t c : cols)
            if (!m_(rows[k], c).is_zero()) ++nz;
        if (nz < best_nonzero) {
            best_nonzero = nz;
            best = k;
        }
    }

    PolyQ acc;
    const size_t r = rows[best];
    for (size_t j = 0; j < cols.size(); ++j) {
        const PolyQ& e = m_(r, cols[j]);
        if (e.is_zero()) continue;
        PolyQ sub = det_masked(rowmask & ~(uint64_t(1) << r), colmask & ~(uint64_t(1) << cols[j]));
        PolyQ contrib = e * sub;
        if ((best + j) % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    cache_.emplace(std::make_pair(rowmask, colmask), acc);
    return acc;
}

namespace {

void for_each_subset(size_t total, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < total) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

std::vector<PolyQ> minors(const PolyMatrixQ& m, size_t k) {
    if (k == 0 || k > m.rows() || k > m.cols())
        throw std::invalid_argument("minor size exceeds matrix extent");
    MinorCache cache(m);
    std::vector<PolyQ> out;
    for_each_subset(m.rows(), k, [&](const std::vector<size_t>& rows) {
        for_each_subset(m.cols(), k, [&](const std::vector<size_t>& cols) {
            PolyQ d = cache.determinant(rows, cols);
            if (!d.is_zero()) out.push_back(std::move(d));
        });
    });
    std::sort(out.begin(), out.end(), poly_census_order<Rational>);
    return out;
}

std::vector<PolyQ> stratum_generators(const StratumSpec& spec, MatrixSource source) {
    if (spec.d > spec.n - 1)
        throw std::invalid_argument("stratum generators need d <= n-1");
    switch (source) {
        case MatrixSource::full:
            return minors(kalman_matrix(symbolic_matrix(spec.n), spec.d),
                          static_cast<size_t>(spec.n - spec.s + 1));
        case MatrixSource::small:
            return minors(small_kalman_matrix(symbolic_matrix(spec.n), spec.d),
                          static_cast<size_t>(spec.d - spec.s + 1));
        case MatrixSource::reduced:
            return minors(reduced_kalman_matrix(spec.d, spec.n),
                          static_cast<size_t>(spec.d - spec.s + 1));
    }
    throw std::logic_error("unreachable");
}

std::map<int, int> degree_census(const std::vector<PolyQ>& polys) {
    std::map<int, int> census;
    for (const auto& p : polys)
        if (!p.is_zero()) ++census[p.degree()];
    return census;
}

std::string census_str(const std::map<int, int>& census) {
    std::string out;
    for (const auto& [deg, count] : census) {
        if (!out.empty()) out += " ";
        out += std::to_string(deg) + ":" + std::to_string(count);
    }
    return out;
}

}  // namespace kalvar
