#pragma once

#include <cstdint>
#include <random>

namespace kalvar {

/// Seeded deterministic generator. Draws below a bound with plain modulo;
/// uniformity bias is irrelevant for the sampling done here and the raw
/// stream keeps golden outputs stable across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}
    uint64_t next() { return g_(); }
    uint64_t below(uint64_t m) { return g_() % m; }
    int64_t in_range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 g_;
};

}  // namespace kalvar
