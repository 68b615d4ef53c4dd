#pragma once

#include <cstdint>
#include <string>

#include "kalvar/matrix.hpp"
#include "kalvar/poly.hpp"

namespace kalvar {

/// Ground-field tag carried by every serialized object: "Q" or {"GFp": p}.
struct FieldDesc {
    bool is_q = true;
    uint32_t p = 0;

    static FieldDesc q() { return {true, 0}; }
    static FieldDesc gfp(uint32_t p) { return {false, p}; }
};

/// Matrix JSON: {"n": n, "field": "Q" | {"GFp": p}, "entries": [row-major
/// scalar strings]}. Rationals print as "num/den" (or "num"), GF(p) values
/// as decimal strings.
std::string matrix_to_json(const MatrixQ& m, int indent = -1);
std::string matrix_to_json(const MatrixGFp& m, int indent = -1);

FieldDesc matrix_json_field(const std::string& text);
MatrixQ matrix_q_from_json(const std::string& text);
MatrixGFp matrix_gfp_from_json(const std::string& text);

/// Polynomial JSON: {"field": ..., "terms": [{"coeff": "...", "monomial":
/// {"a_3_1": 1, ...}}, ...]} with terms lex-descending.
std::string poly_to_json(const PolyQ& f, int indent = -1);
PolyQ poly_q_from_json(const std::string& text);

/// Standalone scalar: {"value": v, "p": p}.
std::string gfp_to_json(const GFp& x);
GFp gfp_from_json(const std::string& text);

}  // namespace kalvar
