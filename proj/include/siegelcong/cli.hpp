// siegelcong: command-line front end with stable text and JSON output
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bernoulli.hpp"
#include "cohen.hpp"
#include "eisenstein.hpp"
#include "ellmod.hpp"
#include "quadform.hpp"
#include "search.hpp"
#include "sklift.hpp"

namespace siegelcong::cli {

using nlohmann::json;

namespace detail {

inline json series_json(const TIndexedSeries& s) {
    json j;
    j["k"] = s.k;
    j["maxdet"] = s.max_det;
    j["variant"] = s.variant;
    j["rank0"] = to_string(s.rank0);
    j["rank1"] = json::array();
    for (const auto& [n, v] : s.rank1) j["rank1"].push_back({n, to_string(v)});
    j["rank2"] = json::array();
    for (const auto& [T, v] : s.rank2) j["rank2"].push_back({T.a, T.b, T.c, to_string(v)});
    return j;
}

inline TIndexedSeries series_from_json(const json& j) {
    TIndexedSeries s;
    s.k = j.at("k").get<int>();
    s.max_det = j.at("maxdet").get<std::int64_t>();
    s.variant = j.at("variant").get<std::string>();
    s.rank0 = parse_rational(j.at("rank0").get<std::string>());
    for (const auto& e : j.at("rank1"))
        s.rank1[e.at(0).get<std::int64_t>()] = parse_rational(e.at(1).get<std::string>());
    for (const auto& e : j.at("rank2")) {
        HalfIntSym T{e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>(),
                     e.at(2).get<std::int64_t>()};
        s.rank2[T] = parse_rational(e.at(3).get<std::string>());
    }
    return s;
}

inline json rows_json(const std::vector<SearchRow>& rows) {
    json out = json::array();
    for (const SearchRow& row : rows) {
        json r;
        r["k"] = row.k;
        r["weight2"] = row.weight2;
        r["chi"] = row.chi_d == 0 ? json() : json(row.chi_d.str());
        r["primes"] = json::array();
        for (const Int& p : row.primes) r["primes"].push_back(p.str());
        r["t"] = row.t;
        r["separable"] = json::array();
        for (bool b : row.separable) r["separable"].push_back(b);
        out.push_back(std::move(r));
    }
    return json{{"rows", std::move(out)}};
}

inline const char* stage_status(StageResult::Status s) {
    switch (s) {
        case StageResult::Status::pass: return "pass";
        case StageResult::Status::fail: return "fail";
        default: return "skip";
    }
}

inline TIndexedSeries load_series_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return TIndexedSeries::read(is);
}

}  // namespace detail

/// Runs one invocation. args excludes the program name. Returns 0 on
/// success, 1 on a verification failure (failed congruence, integrality
/// violation, failed theorem stage), 2 on usage or data errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Fourier-coefficient congruences of degree-2 Siegel Eisenstein series"};
    app.name("siegelcong");
    app.require_subcommand(1);

    struct {
        std::int64_t n = 0, r = 0, N = 0, k = 0, w = 0, ell = 0, prec = -1;
        std::int64_t max_det = 400, ell_bound = 20, kmin = 0, kmax = 0, at = 0;
        std::string p, d = "-4", variant = "content-sum";
        std::string h_file, eigen_file, lhs_file, rhs_file;
    } opt;
    bool as_json = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit JSON"); };

    CLI::App* c_bern = app.add_subcommand("bernoulli", "Bernoulli number B_n");
    c_bern->add_option("n", opt.n, "index")->required();
    add_json(c_bern);

    CLI::App* c_genbern =
        app.add_subcommand("genbernoulli", "generalized Bernoulli number B_{n,chi_D}");
    c_genbern->add_option("n", opt.n, "index")->required();
    c_genbern->add_option("--d", opt.d, "fundamental discriminant")->required();
    add_json(c_genbern);

    CLI::App* c_zeta = app.add_subcommand("zeta", "zeta value at a negative odd integer");
    c_zeta->add_option("--at", opt.at, "argument 1 - k")->required();
    add_json(c_zeta);

    CLI::App* c_lval = app.add_subcommand("lvalue", "Dirichlet L-value L(s, chi_D), s <= 0");
    c_lval->add_option("--at", opt.at, "argument 1 - n")->required();
    c_lval->add_option("--d", opt.d, "fundamental discriminant")->required();
    add_json(c_lval);

    CLI::App* c_cohen = app.add_subcommand("cohen", "Cohen function H(r, N)");
    c_cohen->add_option("r", opt.r, "odd r >= 3")->required();
    c_cohen->add_option("N", opt.N, "index N >= 0")->required();
    add_json(c_cohen);

    CLI::App* c_siegel =
        app.add_subcommand("siegel-factor", "product of local polynomial values at 1 + q^(2k-3)");
    c_siegel->add_option("N", opt.N, "determinant value")->required();
    c_siegel->add_option("--k", opt.k, "weight")->required();
    add_json(c_siegel);

    CLI::App* c_eis = app.add_subcommand("eis-coeffs", "Eisenstein series coefficient table");
    c_eis->add_option("--k", opt.k, "weight")->required();
    c_eis->add_option("--max-det", opt.max_det, "determinant bound");
    c_eis->add_option("--variant", opt.variant, "content-sum or det-only");
    add_json(c_eis);

    CLI::App* c_integral =
        app.add_subcommand("check-integrality", "p-integrality scan of the coefficient table");
    c_integral->add_option("--k", opt.k, "weight")->required();
    c_integral->add_option("--p", opt.p, "prime with p - 1 > 2k - 2")->required();
    c_integral->add_option("--max-det", opt.max_det, "determinant bound");
    c_integral->add_option("--variant", opt.variant, "content-sum or det-only");
    add_json(c_integral);

    CLI::App* c_miller = app.add_subcommand("miller", "integral echelon basis of M_w");
    c_miller->add_option("--w", opt.w, "weight")->required();
    c_miller->add_option("--prec", opt.prec, "q-expansion precision");
    add_json(c_miller);

    CLI::App* c_hecke = app.add_subcommand("hecke", "Hecke matrix on the cuspidal basis");
    c_hecke->add_option("--w", opt.w, "weight")->required();
    c_hecke->add_option("--ell", opt.ell, "prime ell")->required();
    c_hecke->add_option("--prec", opt.prec, "q-expansion precision");
    add_json(c_hecke);

    CLI::App* c_count =
        app.add_subcommand("count-t", "count eigen-systems congruent to the Eisenstein one");
    c_count->add_option("--w", opt.w, "weight")->required();
    c_count->add_option("--p", opt.p, "prime")->required();
    c_count->add_option("--ellbound", opt.ell_bound, "Hecke prime bound");
    add_json(c_count);

    CLI::App* c_search = app.add_subcommand("search", "scan weights with the default discriminants");
    c_search->add_option("--kmin", opt.kmin, "lowest weight")->required();
    c_search->add_option("--kmax", opt.kmax, "highest weight")->required();
    c_search->add_option("--ellbound", opt.ell_bound, "Hecke prime bound");
    add_json(c_search);

    CLI::App* c_table = app.add_subcommand("table1", "summary table at a fixed discriminant");
    c_table->add_option("--kmin", opt.kmin, "lowest weight")->required();
    c_table->add_option("--kmax", opt.kmax, "highest weight")->required();
    c_table->add_option("--d", opt.d, "fundamental discriminant");
    c_table->add_option("--ellbound", opt.ell_bound, "Hecke prime bound");
    add_json(c_table);

    CLI::App* c_skv = app.add_subcommand("sk-verify", "staged congruence theorem verification");
    c_skv->add_option("--k", opt.k, "weight")->required();
    c_skv->add_option("--p", opt.p, "prime")->required();
    c_skv->add_option("--d", opt.d, "fundamental discriminant");
    c_skv->add_option("--max-det", opt.max_det, "determinant bound");
    c_skv->add_option("--h-file", opt.h_file, "half-integral data file (default: Cohen H)");
    c_skv->add_option("--eigen-file", opt.eigen_file, "eigenvalue data file (default: 1 + q^(2k-3))");
    add_json(c_skv);

    CLI::App* c_cong = app.add_subcommand("congruence-check", "compare two coefficient tables mod p");
    c_cong->add_option("--lhs", opt.lhs_file, "left series file")->required();
    c_cong->add_option("--rhs", opt.rhs_file, "right series file")->required();
    c_cong->add_option("--p", opt.p, "prime")->required();
    add_json(c_cong);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto require = [](bool cond, const std::string& what) {
        if (!cond) throw std::domain_error(what);
    };
    auto as_unsigned = [&](std::int64_t v, const std::string& what) {
        require(v >= 0, what + " must be non-negative");
        return static_cast<unsigned>(v);
    };
    auto emit_value = [&](json j, const Rat& v) {
        if (as_json) {
            j["value"] = to_string(v);
            out << j.dump() << "\n";
        } else {
            out << to_string(v) << "\n";
        }
        return 0;
    };

    try {
        if (c_bern->parsed()) {
            return emit_value({{"n", opt.n}}, bernoulli(as_unsigned(opt.n, "n")));
        }
        if (c_genbern->parsed()) {
            QuadChar chi(parse_int(opt.d));
            return emit_value({{"n", opt.n}, {"d", opt.d}},
                              gen_bernoulli(as_unsigned(opt.n, "n"), chi));
        }
        if (c_zeta->parsed()) {
            require(opt.at <= -1 && (1 - opt.at) % 2 == 0,
                    "zeta --at expects a negative odd argument");
            return emit_value({{"at", opt.at}}, zeta_neg(as_unsigned(1 - opt.at, "k")));
        }
        if (c_lval->parsed()) {
            require(opt.at <= 0, "lvalue --at expects a non-positive argument");
            QuadChar chi(parse_int(opt.d));
            return emit_value({{"at", opt.at}, {"d", opt.d}},
                              L_neg(as_unsigned(1 - opt.at, "n"), chi));
        }
        if (c_cohen->parsed()) {
            return emit_value({{"r", opt.r}, {"n", opt.N}},
                              cohen_H(as_unsigned(opt.r, "r"), Int(opt.N)));
        }
        if (c_siegel->parsed()) {
            Int v = siegel_factor(Int(opt.N), as_unsigned(opt.k, "k"));
            return emit_value({{"n", opt.N}, {"k", opt.k}}, Rat(v));
        }
        if (c_eis->parsed()) {
            EisensteinSpec spec(as_unsigned(opt.k, "k"), parse_variant(opt.variant));
            TIndexedSeries s = eis_expansion(spec, opt.max_det);
            if (as_json)
                out << detail::series_json(s).dump() << "\n";
            else
                s.write(out);
            return 0;
        }
        if (c_integral->parsed()) {
            EisensteinSpec spec(as_unsigned(opt.k, "k"), parse_variant(opt.variant));
            IntegralityReport r = check_integrality(spec, parse_int(opt.p), opt.max_det);
            std::size_t total = 1 + static_cast<std::size_t>(opt.max_det) +
                                enumerate_reduced(opt.max_det).size();
            if (as_json) {
                json j{{"k", opt.k},       {"p", opt.p},
                       {"maxdet", opt.max_det}, {"variant", r.variant},
                       {"ok", r.ok()},     {"checked", total}};
                j["violations"] = json::array();
                for (const auto& [key, v] : r.violations)
                    j["violations"].push_back({to_string(key), v});
                out << j.dump() << "\n";
            } else if (r.ok()) {
                out << "ok checked=" << total << "\n";
            } else {
                for (const auto& [key, v] : r.violations)
                    out << "violation " << to_string(key) << " ord=" << v << "\n";
                out << "FAIL violations=" << r.violations.size() << "\n";
            }
            return r.ok() ? 0 : 1;
        }
        if (c_miller->parsed()) {
            unsigned w = as_unsigned(opt.w, "w");
            std::int64_t P = opt.prec >= 0
                                 ? opt.prec
                                 : static_cast<std::int64_t>(dim_modforms(w)) + 10;
            std::vector<QExpansion> basis = miller_basis(w, P);
            if (as_json) {
                json j{{"w", opt.w}, {"prec", P}};
                j["basis"] = json::array();
                for (const QExpansion& f : basis) {
                    json row = json::array();
                    for (const Rat& v : f.a) row.push_back(to_string(v));
                    j["basis"].push_back(std::move(row));
                }
                out << j.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    out << "# element " << i << "\n";
                    basis[i].write(out);
                }
            }
            return 0;
        }
        if (c_hecke->parsed()) {
            unsigned w = as_unsigned(opt.w, "w");
            HeckeMatrix H = opt.prec >= 0 ? hecke_matrix(w, opt.ell, opt.prec)
                                          : hecke_matrix(w, opt.ell);
            if (as_json) {
                json j{{"w", opt.w}, {"ell", opt.ell}, {"dim", H.dim()}};
                j["matrix"] = json::array();
                for (const auto& row : H.m) {
                    json r = json::array();
                    for (const Int& v : row) r.push_back(v.str());
                    j["matrix"].push_back(std::move(r));
                }
                out << j.dump() << "\n";
            } else {
                for (const auto& row : H.m) {
                    for (std::size_t j = 0; j < row.size(); ++j)
                        out << (j ? " " : "") << row[j].str();
                    out << "\n";
                }
            }
            return 0;
        }
        if (c_count->parsed()) {
            std::size_t t =
                count_congruent_systems(as_unsigned(opt.w, "w"), parse_int(opt.p), opt.ell_bound);
            if (as_json)
                out << json{{"w", opt.w}, {"p", opt.p}, {"ellbound", opt.ell_bound}, {"t", t}}
                           .dump()
                    << "\n";
            else
                out << t << "\n";
            return 0;
        }
        if (c_search->parsed() || c_table->parsed()) {
            std::vector<Int> ds = c_search->parsed() ? default_discriminants()
                                                     : std::vector<Int>{parse_int(opt.d)};
            std::vector<SearchRow> rows =
                table1(as_unsigned(opt.kmin, "kmin"), as_unsigned(opt.kmax, "kmax"), ds,
                       opt.ell_bound);
            if (as_json)
                out << detail::rows_json(rows).dump() << "\n";
            else
                out << render_table(rows);
            return 0;
        }
        if (c_skv->parsed()) {
            unsigned k = as_unsigned(opt.k, "k");
            HalfIntegralData h = opt.h_file.empty()
                                     ? pseudo_eisenstein_h(k, opt.max_det)
                                     : load_half_integral_file(opt.h_file, k);
            EigenData phi =
                opt.eigen_file.empty()
                    ? pseudo_eisenstein_phi(k, boost::multiprecision::sqrt(Int(opt.max_det)) + 1)
                    : load_eigen_file(opt.eigen_file, 2 * k - 2);
            TheoremReport r =
                theorem_sk_verify(k, parse_int(opt.p), parse_int(opt.d), opt.max_det, h, phi);
            if (as_json) {
                json j{{"k", opt.k}, {"p", opt.p}, {"d", opt.d}, {"maxdet", opt.max_det},
                       {"ok", r.ok()}};
                j["stages"] = json::array();
                for (const StageResult& s : r.stages)
                    j["stages"].push_back({{"name", s.name},
                                           {"status", detail::stage_status(s.status)},
                                           {"detail", s.detail}});
                out << j.dump() << "\n";
            } else {
                for (const StageResult& s : r.stages) {
                    out << detail::stage_status(s.status) << " " << s.name;
                    if (!s.detail.empty()) out << ": " << s.detail;
                    out << "\n";
                }
                out << (r.ok() ? "ok" : "FAIL") << "\n";
            }
            return r.ok() ? 0 : 1;
        }
        if (c_cong->parsed()) {
            TIndexedSeries lhs = detail::load_series_file(opt.lhs_file);
            TIndexedSeries rhs = detail::load_series_file(opt.rhs_file);
            CongruenceReport r = congruence_check(lhs, rhs, parse_int(opt.p));
            if (as_json) {
                json j{{"p", opt.p}, {"ok", r.ok}, {"checked", r.checked}};
                if (r.first_failure) {
                    const auto& f = *r.first_failure;
                    j["first_failure"] = {{"key", to_string(f.key)},
                                          {"lhs", to_string(f.lhs)},
                                          {"rhs", to_string(f.rhs)},
                                          {"ord", f.ord_gap}};
                } else {
                    j["first_failure"] = nullptr;
                }
                out << j.dump() << "\n";
            } else if (r.ok) {
                out << "ok checked=" << r.checked << "\n";
            } else {
                const auto& f = *r.first_failure;
                out << "FAIL at " << to_string(f.key) << ": lhs=" << to_string(f.lhs)
                    << " rhs=" << to_string(f.rhs) << " ord=" << f.ord_gap << "\n";
            }
            return r.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace siegelcong::cli
