#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace kalvar {

/// Matrix variable a_{ij}, 1-based indices. The total order of variables is
/// row-major descending: a_11 > a_12 > ... > a_1n > a_21 > ... > a_nn, i.e.
/// a_{ij} ranks above a_{kl} exactly when (i,j) precedes (k,l).
struct VarId {
    uint16_t i = 0;
    uint16_t j = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// True when a ranks above b in the variable order.
inline bool var_above(VarId a, VarId b) { return a < b; }

/// Text form: "a31" when both indices are single digits, "a_12_3" otherwise.
inline std::string var_str(VarId v, bool compact = true) {
    if (compact && v.i <= 9 && v.j <= 9)
        return "a" + std::to_string(v.i) + std::to_string(v.j);
    return "a_" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

/// JSON object key, always the underscore form.
inline std::string var_key(VarId v) {
    return "a_" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

}  // namespace kalvar
