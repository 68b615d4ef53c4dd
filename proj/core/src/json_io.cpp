#include "kalvar/json_io.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>

namespace kalvar {

using json = nlohmann::ordered_json;

namespace {

json field_json(const FieldDesc& f) {
    if (f.is_q) return json("Q");
    return json{{"GFp", f.p}};
}

FieldDesc field_from(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldDesc::q();
    if (j.is_object() && j.contains("GFp") && j["GFp"].is_number_unsigned())
        return FieldDesc::gfp(j["GFp"].get<uint32_t>());
    throw std::invalid_argument("field must be \"Q\" or {\"GFp\": p}");
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

template <class K>
json matrix_json(const Matrix<K>& m, const FieldDesc& f) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix JSON is for square matrices");
    json entries = json::array();
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) entries.push_back(m(r, c).str());
    return json{{"n", m.rows()}, {"field", field_json(f)}, {"entries", entries}};
}

template <class K>
Matrix<K> matrix_from(const json& j, const std::function<K(const std::string&)>& scalar,
                      const K& zero) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON needs \"n\" and \"entries\"");
    size_t n = j["n"].get<size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n * n)
        throw std::invalid_argument("matrix JSON needs n*n entries");
    Matrix<K> m(n, n, zero);
    for (size_t k = 0; k < entries.size(); ++k) {
        if (!entries[k].is_string()) throw std::invalid_argument("matrix entries must be strings");
        m(k / n, k % n) = scalar(entries[k].get<std::string>());
    }
    return m;
}

VarId var_from_key(const std::string& key) {
    // "a_<i>_<j>"
    if (key.size() < 5 || key[0] != 'a' || key[1] != '_')
        throw std::invalid_argument("bad variable key '" + key + "'");
    auto sep = key.find('_', 2);
    if (sep == std::string::npos || sep + 1 >= key.size())
        throw std::invalid_argument("bad variable key '" + key + "'");
    int i = std::stoi(key.substr(2, sep - 2));
    int j = std::stoi(key.substr(sep + 1));
    if (i < 1 || j < 1 || i > 65535 || j > 65535)
        throw std::invalid_argument("bad variable key '" + key + "'");
    return {static_cast<uint16_t>(i), static_cast<uint16_t>(j)};
}

}  // namespace

std::string matrix_to_json(const MatrixQ& m, int indent) {
    return matrix_json(m, FieldDesc::q()).dump(indent);
}

std::string matrix_to_json(const MatrixGFp& m, int indent) {
    return matrix_json(m, FieldDesc::gfp(m(0, 0).modulus())).dump(indent);
}

FieldDesc matrix_json_field(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("field"))
        throw std::invalid_argument("matrix JSON needs a \"field\"");
    return field_from(j["field"]);
}

MatrixQ matrix_q_from_json(const std::string& text) {
    json j = parse(text);
    if (!field_from(j.value("field", json("Q"))).is_q)
        throw std::invalid_argument("expected a matrix over Q");
    return matrix_from<Rational>(
        j, [](const std::string& s) { return Rational::parse(s); }, Rational());
}

MatrixGFp matrix_gfp_from_json(const std::string& text) {
    json j = parse(text);
    FieldDesc f = field_from(j.value("field", json()));
    if (f.is_q) throw std::invalid_argument("expected a matrix over GF(p)");
    return matrix_from<GFp>(
        j,
        [&](const std::string& s) {
            try {
                return GFp(std::stoll(s), f.p);
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad GF(p) entry '" + s + "'");
            }
        },
        GFp(0, f.p));
}

std::string poly_to_json(const PolyQ& f, int indent) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors()) mono[var_key(v)] = e;
        terms.push_back(json{{"coeff", c.str()}, {"monomial", mono}});
    }
    return json{{"field", "Q"}, {"terms", terms}}.dump(indent);
}

PolyQ poly_q_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
    PolyQ f;
    for (const auto& t : j["terms"]) {
        if (!t.contains("coeff") || !t.contains("monomial"))
            throw std::invalid_argument("each term needs \"coeff\" and \"monomial\"");
        std::vector<Monomial::Factor> factors;
        for (const auto& [key, e] : t["monomial"].items())
            factors.push_back({var_from_key(key), e.get<int>()});
        f.add_term(Monomial(std::move(factors)), Rational::parse(t["coeff"].get<std::string>()));
    }
    return f;
}

std::string gfp_to_json(const GFp& x) {
    return json{{"value", x.value()}, {"p", x.modulus()}}.dump();
}

GFp gfp_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("value") || !j.contains("p"))
        throw std::invalid_argument("GF(p) JSON needs \"value\" and \"p\"");
    return GFp(j["value"].get<int64_t>(), j["p"].get<uint32_t>());
}

}  // namespace kalvar
