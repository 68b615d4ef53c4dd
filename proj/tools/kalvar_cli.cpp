// Command-line front end for the Kalman-variety toolkit. Subcommands expose
// the matrix constructions, ideal generators, membership tests, witness
// sampling, degree formulas, and the d=2 Groebner/Hilbert checks with stable
// text or JSON output. Exit codes: 0 success/pass, 1 check failure, 2 usage
// or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kalvar/kalvar.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kalvar;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json spec_json(const StratumSpec& spec) {
    return json{{"s", spec.s}, {"d", spec.d}, {"n", spec.n}};
}

json census_json(const std::map<int, int>& census) {
    json out = json::object();
    for (const auto& [deg, count] : census) out[std::to_string(deg)] = count;
    return out;
}

int emit_reports(const std::vector<json>& reports, bool as_json) {
    bool all_pass = true;
    for (const auto& r : reports)
        if (!r.at("pass").get<bool>()) all_pass = false;
    if (as_json) {
        std::cout << json(reports).dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << " "
                      << r.at("check").get<std::string>();
            if (r.contains("details"))
                for (const auto& [k, v] : r.at("details").items())
                    std::cout << " " << k << "=" << v.dump();
            std::cout << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- matrix --

int run_matrix(const std::string& kind, int d, int n, const std::string& file, bool as_json) {
    auto emit_poly_matrix = [&](const PolyMatrixQ& m) {
        if (as_json) {
            json entries = json::array();
            for (size_t r = 0; r < m.rows(); ++r)
                for (size_t c = 0; c < m.cols(); ++c)
                    entries.push_back(json::parse(poly_to_json(m(r, c))));
            std::cout << json{{"rows", m.rows()},
                              {"cols", m.cols()},
                              {"kind", kind},
                              {"field", "Q"},
                              {"entries", entries}}
                             .dump(2)
                      << "\n";
        } else {
            for (size_t r = 0; r < m.rows(); ++r) {
                std::string line = "[";
                for (size_t c = 0; c < m.cols(); ++c) {
                    if (c) line += ", ";
                    line += poly_str(m(r, c));
                }
                std::cout << line << "]\n";
            }
        }
    };

    auto build_sym = [&]() -> PolyMatrixQ {
        PolyMatrixQ a = symbolic_matrix(n);
        if (kind == "full") return kalman_matrix(a, d);
        if (kind == "small") return small_kalman_matrix(a, d);
        return reduced_kalman_matrix(d, n);
    };

    if (file.empty()) {
        emit_poly_matrix(build_sym());
        return 0;
    }

    std::string text = read_input(file);
    FieldDesc fd = matrix_json_field(text);
    auto emit_scalar = [&](const auto& m, const json& field) {
        json entries = json::array();
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) entries.push_back(m(r, c).str());
        if (as_json) {
            std::cout << json{{"rows", m.rows()},
                              {"cols", m.cols()},
                              {"kind", kind},
                              {"field", field},
                              {"entries", entries}}
                             .dump(2)
                      << "\n";
        } else {
            for (size_t r = 0; r < m.rows(); ++r) {
                std::string line = "[";
                for (size_t c = 0; c < m.cols(); ++c) {
                    if (c) line += ", ";
                    line += m(r, c).str();
                }
                std::cout << line << "]\n";
            }
        }
    };
    auto build = [&](const auto& a) {
        using M = std::decay_t<decltype(a)>;
        if (kind == "full") return kalman_matrix(a, d);
        if (kind == "small") return small_kalman_matrix(a, d);
        return M(reduced_kalman_matrix(a, d));
    };
    if (fd.is_q) {
        MatrixQ a = matrix_q_from_json(text);
        if (a.rows() != static_cast<size_t>(n)) throw std::invalid_argument("--n does not match matrix");
        emit_scalar(build(a), json("Q"));
    } else {
        MatrixGFp a = matrix_gfp_from_json(text);
        if (a.rows() != static_cast<size_t>(n)) throw std::invalid_argument("--n does not match matrix");
        emit_scalar(build(a), json{{"GFp", fd.p}});
    }
    return 0;
}

// ------------------------------------------------------------ generators --

int run_generators(int s, int d, int n, const std::string& source, bool as_json) {
    StratumSpec spec(s, d, n);
    MatrixSource src = source == "full"    ? MatrixSource::full
                       : source == "small" ? MatrixSource::small
                                           : MatrixSource::reduced;
    std::vector<PolyQ> gens = stratum_generators(spec, src);
    auto census = degree_census(gens);
    if (as_json) {
        json out{{"spec", spec_json(spec)}, {"source", source}, {"census", census_json(census)}};
        json list = json::array();
        for (const auto& g : gens) list.push_back(json::parse(poly_to_json(g)));
        out["generators"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "census " << census_str(census) << "\n";
        for (const auto& g : gens) std::cout << poly_str(g) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- member --

int run_member(int s, int d, int n, const std::string& file, bool as_json) {
    StratumSpec spec(s, d, n);
    std::string text = read_input(file);
    FieldDesc fd = matrix_json_field(text);

    json out;
    bool verdict = false;
    if (fd.is_q) {
        auto detail = membership_detail(matrix_q_from_json(text), spec);
        verdict = detail.member;
        out = json{{"member", detail.member},
                   {"rank_full", detail.rank_full},
                   {"rank_small", detail.rank_small}};
    } else {
        auto detail = membership_detail(matrix_gfp_from_json(text), spec);
        verdict = detail.member;
        out = json{{"member", detail.member},
                   {"rank_full", detail.rank_full},
                   {"rank_small", detail.rank_small}};
    }
    out["full_bound"] = n - s;
    out["small_bound"] = d - s;
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << (verdict ? "true" : "false") << "\n";
    return 0;
}

// --------------------------------------------------------------- witness --

int run_witness(int s, int d, int n, uint32_t p, bool rational, uint64_t seed) {
    StratumSpec spec(s, d, n);
    json out{{"spec", spec_json(spec)}, {"seed", seed}};
    auto basis_json = [](const auto& basis) {
        json rows = json::array();
        for (size_t r = 0; r < basis.rows(); ++r) {
            json row = json::array();
            for (size_t c = 0; c < basis.cols(); ++c) row.push_back(basis(r, c).str());
            rows.push_back(row);
        }
        return rows;
    };
    if (rational) {
        auto w = make_witness_q(spec, seed);
        out["field"] = "Q";
        out["matrix"] = json::parse(matrix_to_json(w.a));
        out["basis"] = basis_json(w.basis);
    } else {
        auto w = make_witness_gfp(spec, p, seed);
        out["field"] = json{{"GFp", p}};
        out["matrix"] = json::parse(matrix_to_json(w.a));
        out["basis"] = basis_json(w.basis);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- degree --

int run_degree(int s, int d, int n, const std::string& method, bool as_json) {
    StratumSpec spec(s, d, n);
    if (method != "all") {
        Int v;
        if (method == "schur")
            v = degree_schur(spec);
        else if (method == "binomial")
            v = degree_binomial(spec);
        else if (method == "univariate")
            v = degree_univariate(spec);
        else
            v = degree_koutschan(d, n);
        if (as_json)
            std::cout << json{{"spec", spec_json(spec)}, {"method", method}, {"degree", v.get_str()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << v.get_str() << "\n";
        return 0;
    }

    DegreeAgreement agg = degree_all_methods(spec);
    if (as_json) {
        json methods = json::object();
        for (const auto& [name, v] : agg.methods) methods[name] = v.get_str();
        std::cout << json{{"spec", spec_json(spec)},
                          {"degree", agg.degree.get_str()},
                          {"methods", methods},
                          {"agree", agg.agree}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << agg.degree.get_str() << "\n";
    }
    if (!agg.agree) {
        std::cerr << "degree methods disagree\n";
        return 1;
    }
    return 0;
}

int run_grid_degree(int nmax, bool as_json) {
    bool all_agree = true;
    json rows = json::array();
    if (!as_json) std::cout << "s d n degree methods\n";
    for (int s = 1; s <= nmax; ++s)
        for (int d = s; d <= nmax; ++d)
            for (int n = d; n <= nmax; ++n) {
                DegreeAgreement agg = degree_all_methods(StratumSpec(s, d, n));
                if (!agg.agree) all_agree = false;
                std::string methods;
                for (const auto& [name, v] : agg.methods) {
                    if (!methods.empty()) methods += ",";
                    methods += name;
                }
                if (as_json) {
                    rows.push_back(json{{"s", s},
                                        {"d", d},
                                        {"n", n},
                                        {"degree", agg.degree.get_str()},
                                        {"methods", methods},
                                        {"agree", agg.agree}});
                } else {
                    std::cout << s << " " << d << " " << n << " " << agg.degree.get_str() << " "
                              << methods << "\n";
                }
            }
    if (as_json) std::cout << rows.dump(2) << "\n";
    if (!all_agree) {
        std::cerr << "degree methods disagree on the grid\n";
        return 1;
    }
    return 0;
}

// --------------------------------------------------------------- hilbert --

int run_hilbert(int n, int tmax, bool as_json) {
    UniRationalFn series = hilbert_series_closed(n);
    UniPolyQ hp = hilbert_polynomial(n);
    int threshold = agreement_threshold(n, tmax);
    const int den_power = n * n - n + 2;

    json table = json::array();
    for (int t = 0; t <= tmax; ++t) {
        Int hf = hilbert_function(n, t);
        Int hpv = hp.eval(Rational(t)).to_int();
        table.push_back(json{{"t", t}, {"hf", hf.get_str()}, {"hp", hpv.get_str()}});
    }
    if (as_json) {
        json num = json::array();
        for (const auto& c : series.num().coeffs()) num.push_back(c.get_str());
        std::cout << json{{"n", n},
                          {"table", table},
                          {"series_numerator", num},
                          {"series_denominator_power", den_power},
                          {"agreement_threshold", threshold}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "n " << n << "\n";
        std::cout << "t hilbert_function hilbert_polynomial\n";
        for (const auto& row : table)
            std::cout << row["t"].get<int>() << " " << row["hf"].get<std::string>() << " "
                      << row["hp"].get<std::string>() << "\n";
        std::cout << "series (" << series.num().str("z") << ")/(1-z)^" << den_power << "\n";
        std::cout << "threshold " << threshold << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- gbcheck --

int run_gbcheck(int n, int tmax, bool as_json) {
    std::vector<json> reports;

    GB2Basis basis = gb_generators(n);
    const Int want_quadrics = binomial(n - 2, 2), want_cubics = binomial(n - 1, 2);
    bool counts_ok = Int(basis.quadrics.size()) == want_quadrics &&
                     Int(basis.cubics.size()) == want_cubics;
    bool leaders_ok = true;
    {
        size_t k = 0;
        for (int i = 3; i <= n && leaders_ok; ++i)
            for (int j = i + 1; j <= n && leaders_ok; ++j) {
                Monomial want({{{static_cast<uint16_t>(i), 1}, 1},
                               {{static_cast<uint16_t>(j), 2}, 1}});
                leaders_ok = basis.quadrics[k++].leading_monomial() == want;
            }
        k = 0;
        for (int i = 3; i <= n && leaders_ok; ++i)
            for (int j = i; j <= n && leaders_ok; ++j) {
                Monomial want({{{1, 1}, 1},
                               {{static_cast<uint16_t>(i), 2}, 1},
                               {{static_cast<uint16_t>(j), 1}, 1}});
                leaders_ok = basis.cubics[k++].leading_monomial() == want;
            }
    }
    reports.push_back(json{{"check", "generator_census"},
                           {"n", n},
                           {"pass", counts_ok && leaders_ok},
                           {"details",
                            json{{"quadrics", basis.quadrics.size()},
                                 {"cubics", basis.cubics.size()},
                                 {"leading_terms_match", leaders_ok}}}});

    BuchbergerReport buch = verify_buchberger(n);
    reports.push_back(json{{"check", "buchberger"},
                           {"n", n},
                           {"pass", buch.all_reduce_to_zero},
                           {"details", json{{"pairs_checked", buch.pairs_checked}}}});

    InitialIdealInfo info = initial_ideal_and_facets(n);
    bool facets_ok = info.intersection_matches && info.unmixed &&
                     info.codim == n - 2 && info.degree == n &&
                     static_cast<int>(info.complex.facets.size()) == n;
    reports.push_back(json{{"check", "initial_ideal_facets"},
                           {"n", n},
                           {"pass", facets_ok},
                           {"details",
                            json{{"facets", info.complex.facets.size()},
                                 {"codim", info.codim},
                                 {"degree", info.degree},
                                 {"intersection_matches", info.intersection_matches}}}});

    bool series_ok = hilbert_series_closed(n) == hilbert_series_shelling(n);
    std::vector<Int> expansion =
        series_coefficients(hilbert_series_closed(n), tmax);
    bool hf_ok = hilbert_function(n, 1) == Int(n) * n;
    for (int t = 0; t <= tmax && hf_ok; ++t) hf_ok = hilbert_function(n, t) == expansion[t];
    reports.push_back(json{{"check", "hilbert_series"},
                           {"n", n},
                           {"pass", series_ok && hf_ok},
                           {"details",
                            json{{"shelling_identity", series_ok},
                                 {"function_matches_series", hf_ok},
                                 {"tmax", tmax}}}});

    if (4 <= n && n <= 7) {
        bool minors_ok = small_minors_reduce_to_zero(n);
        reports.push_back(json{{"check", "small_minors_reduce"},
                               {"n", n},
                               {"pass", minors_ok},
                               {"details", json::object()}});
    }

    return emit_reports(reports, as_json);
}

// ----------------------------------------------------------- multidegree --

int run_multidegree(int n, bool as_json) {
    MultidegreePair md = multidegree_incidence(n);
    if (as_json) {
        json a = json::array(), b = json::array();
        for (const auto& c : md.incidence.coeffs) a.push_back(c.get_str());
        for (const auto& c : md.substituted.coeffs) b.push_back(c.get_str());
        std::cout << json{{"n", n},
                          {"incidence", a},
                          {"substituted", b},
                          {"matches_binomial", md.matches_binomial}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "C(t1,t2) = " << md.incidence.str() << "\n";
        std::cout << "C(t1+t2,t2) = " << md.substituted.str() << "\n";
        std::cout << "coefficients_match_binomial " << (md.matches_binomial ? "true" : "false")
                  << "\n";
    }
    return md.matches_binomial ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kalvar: exact constructions, membership tests, Groebner and degree\n"
                 "computations for Kalman varieties K_{s,d,n}"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string format = "text";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // matrix
    {
        auto* cmd = app.add_subcommand("matrix", "Emit a Kalman matrix (symbolic, or evaluated at a matrix JSON)");
        auto kind = std::make_shared<std::string>("full");
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto file = std::make_shared<std::string>();
        cmd->add_option("--kind", *kind, "full, small, or reduced")
            ->required()
            ->check(CLI::IsMember({"full", "small", "reduced"}));
        cmd->add_option("--d", *d, "dimension of L")->required();
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--file", *file, "matrix JSON to evaluate at ('-' for stdin)");
        add_format(cmd);
        cmd->callback([&action, kind, d, n, file, &format]() {
            action = [=, &format]() { return run_matrix(*kind, *d, *n, *file, format == "json"); };
        });
    }

    // generators
    {
        auto* cmd = app.add_subcommand("generators", "Minor generators of the stratum ideal, with degree census");
        auto s = std::make_shared<int>(1);
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto source = std::make_shared<std::string>("reduced");
        cmd->add_option("--s", *s, "invariant subspace dimension")->required();
        cmd->add_option("--d", *d, "dimension of L")->required();
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--source", *source, "full, small, or reduced")
            ->check(CLI::IsMember({"full", "small", "reduced"}));
        add_format(cmd);
        cmd->callback([&action, s, d, n, source, &format]() {
            action = [=, &format]() { return run_generators(*s, *d, *n, *source, format == "json"); };
        });
    }

    // member
    {
        auto* cmd = app.add_subcommand("member", "Rank-criterion membership test for a matrix JSON");
        auto s = std::make_shared<int>(1);
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto file = std::make_shared<std::string>("-");
        cmd->add_option("--s", *s, "invariant subspace dimension")->required();
        cmd->add_option("--d", *d, "dimension of L")->required();
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--file", *file, "matrix JSON path ('-' for stdin)");
        add_format(cmd);
        cmd->callback([&action, s, d, n, file, &format]() {
            action = [=, &format]() { return run_member(*s, *d, *n, *file, format == "json"); };
        });
    }

    // witness
    {
        auto* cmd = app.add_subcommand("witness", "Sample a certified member of K_{s,d,n}");
        auto s = std::make_shared<int>(1);
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<uint32_t>(101);
        auto rational = std::make_shared<bool>(false);
        auto seed = std::make_shared<uint64_t>(0);
        cmd->add_option("--s", *s, "invariant subspace dimension")->required();
        cmd->add_option("--d", *d, "dimension of L")->required();
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--p", *p, "prime modulus (default 101)");
        cmd->add_flag("--rational", *rational, "sample over Q instead of GF(p)");
        cmd->add_option("--seed", *seed, "RNG seed")->required();
        cmd->callback([&action, s, d, n, p, rational, seed]() {
            action = [=]() { return run_witness(*s, *d, *n, *p, *rational, *seed); };
        });
    }

    // degree
    {
        auto* cmd = app.add_subcommand("degree", "deg K_{s,d,n} by one or all applicable formulas");
        auto s = std::make_shared<int>(1);
        auto d = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto method = std::make_shared<std::string>("all");
        cmd->add_option("--s", *s, "invariant subspace dimension")->required();
        cmd->add_option("--d", *d, "dimension of L")->required();
        cmd->add_option("--n", *n, "ambient dimension")->required();
        cmd->add_option("--method", *method, "all, schur, binomial, univariate, koutschan")
            ->check(CLI::IsMember({"all", "schur", "binomial", "univariate", "koutschan"}));
        add_format(cmd);
        cmd->callback([&action, s, d, n, method, &format]() {
            action = [=, &format]() { return run_degree(*s, *d, *n, *method, format == "json"); };
        });
    }

    // grid-degree
    {
        auto* cmd = app.add_subcommand("grid-degree", "Degree table over all 1 <= s <= d <= n <= nmax");
        auto nmax = std::make_shared<int>(8);
        cmd->add_option("--nmax", *nmax, "grid bound (default 8)");
        add_format(cmd);
        cmd->callback([&action, nmax, &format]() {
            action = [=, &format]() { return run_grid_degree(*nmax, format == "json"); };
        });
    }

    // hilbert
    {
        auto* cmd = app.add_subcommand("hilbert", "d=2 Hilbert function table and closed series");
        auto n = std::make_shared<int>(0);
        auto tmax = std::make_shared<int>(8);
        cmd->add_option("--n", *n, "ambient dimension (>= 3)")->required();
        cmd->add_option("--tmax", *tmax, "table bound (default 8)");
        add_format(cmd);
        cmd->callback([&action, n, tmax, &format]() {
            action = [=, &format]() { return run_hilbert(*n, *tmax, format == "json"); };
        });
    }

    // gbcheck
    {
        auto* cmd = app.add_subcommand("gbcheck", "d=2 Groebner, facet, and Hilbert-series checks");
        auto n = std::make_shared<int>(0);
        auto tmax = std::make_shared<int>(8);
        cmd->add_option("--n", *n, "ambient dimension (>= 3)")->required();
        cmd->add_option("--tmax", *tmax, "Hilbert table bound (default 8)");
        add_format(cmd);
        cmd->callback([&action, n, tmax, &format]() {
            action = [=, &format]() { return run_gbcheck(*n, *tmax, format == "json"); };
        });
    }

    // multidegree
    {
        auto* cmd = app.add_subcommand("multidegree", "Bidegree of the eigenvector incidence and its substitution");
        auto n = std::make_shared<int>(0);
        cmd->add_option("--n", *n, "ambient dimension")->required();
        add_format(cmd);
        cmd->callback([&action, n, &format]() {
            action = [=, &format]() { return run_multidegree(*n, format == "json"); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
