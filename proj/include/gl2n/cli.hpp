#pragma once

/**
 * @file cli.hpp
 * @brief Batch front-end: classification, construction, and verification
 *        suites with one JSON report per invocation on standard output and a
 *        human summary on standard error.  Exit codes: 0 pass, 1 fail,
 *        2 usage error.
 */

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gl2n/congruence.hpp"
#include "gl2n/cosets.hpp"
#include "gl2n/lie.hpp"
#include "gl2n/poly_json.hpp"
#include "gl2n/random_poly.hpp"
#include "gl2n/report.hpp"
#include "gl2n/vectors.hpp"
#include "gl2n/weights.hpp"

namespace gl2n::cli {

struct GlobalOptions {
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int samples = 50;

    CongruencePolicy policy() const { return {tol, samples, seed}; }
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty integer list");
    return out;
}

inline nlohmann::ordered_json int_list_json(const std::vector<int>& v) {
    return nlohmann::ordered_json(v);
}

inline CongruenceVerdict exact_or_fail(bool ok, long defect_terms = 0) {
    CongruenceVerdict v;
    v.status = ok ? CheckStatus::certified_exact : CheckStatus::fail;
    v.remainder_terms = ok ? 0 : defect_terms;
    return v;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot write " + path);
    out << body << '\n';
}

}  // namespace detail

// ---------------------------------------------------------------- suites ---

inline CheckResult check_phi_eigen(int n, int j, int l) {
    return timed_check("phi-eigen n=" + std::to_string(n) + " j=" + std::to_string(j) +
                           " l=" + std::to_string(l),
                       [&] {
                           Polynomial phi = phi_pair(j, l, n);
                           Polynomial lhs = apply_casimir(phi);
                           return congruent_mod_i(lhs, GaussianRational(4 * n) * phi, {});
                       });
}

inline CheckResult check_fundamental_eigen(int n, int k, const CongruencePolicy& policy) {
    const long ev = 4L * n * k - 2L * k * (k - 1);
    return timed_check("fundamental-eigen n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " value=" + std::to_string(ev),
                       [&] {
                           Polynomial fk = fundamental_polynomial(k, n);
                           Polynomial lhs = apply_casimir(fk);
                           return congruent_mod_i(lhs, GaussianRational(ev) * fk, policy);
                       });
}

inline CheckResult check_pairing_lemma(int n) {
    return timed_check("pairing-lemma n=" + std::to_string(n), [&] {
        const auto gens = relation_generators(n);
        long worst = 0;
        for (int j = 1; j <= 2 * n; ++j)
            for (int l = 1; l <= 2 * n; ++l) {
                if (j == l) continue;
                auto red = reduce_by_relations(v_pair(j, l, n) + phi_pair(j, l, n), gens);
                worst = std::max(worst, static_cast<long>(red.remainder.term_count()));
            }
        return detail::exact_or_fail(worst == 0, worst);
    });
}

inline CheckResult check_bracket(int n, int trials, std::uint64_t seed) {
    return timed_check("bracket-defect n=" + std::to_string(n) + " trials=" + std::to_string(trials),
                       [&] {
                           long bad = 0;
                           for (int t = 0; t < trials; ++t) {
                               Polynomial p = random_polynomial(n, 3, 5, seed + static_cast<std::uint64_t>(t));
                               for (int a = 1; a <= 2 * n; ++a)
                                   for (int b = 1; b <= 2 * n; ++b) {
                                       if (a == b) continue;
                                       if (!bracket_defect(a, b, p).is_zero()) ++bad;
                                   }
                           }
                           return detail::exact_or_fail(bad == 0, bad);
                       });
}

inline CheckResult check_centrality(int n, int trials, std::uint64_t seed) {
    return timed_check("casimir-centrality n=" + std::to_string(n) + " trials=" + std::to_string(trials),
                       [&] {
                           long bad = 0;
                           for (int t = 0; t < trials; ++t) {
                               Polynomial p = random_polynomial(n, 3, 4, seed + 77 + static_cast<std::uint64_t>(t));
                               Polynomial om = apply_casimir(p);
                               for (int a = 1; a <= 2 * n; ++a)
                                   for (int b = 1; b <= 2 * n; ++b) {
                                       if (a == b) continue;
                                       if (!(apply_root(a, b, om) == apply_casimir(apply_root(a, b, p)))) ++bad;
                                   }
                           }
                           return detail::exact_or_fail(bad == 0, bad);
                       });
}

inline CheckResult check_equivariance(const TestVectorSpec& spec, int samples, std::uint64_t seed,
                                      double tol) {
    std::string name = "equivariance n=" + std::to_string(spec.n) + " L=" + std::to_string(spec.L) +
                       " l=" + std::to_string(spec.l);
    return timed_check(name, [&] {
        Polynomial vec = cohomological_vector(spec);
        return verify_equivariance(vec, spec, samples, seed, tol);
    });
}

inline CheckResult check_factorization(const TestVectorSpec& spec) {
    std::string name = "factorization n=" + std::to_string(spec.n) + " L=" + std::to_string(spec.L) +
                       " l=" + std::to_string(spec.l);
    return timed_check(name, [&] { return verify_restriction_factorization(spec); });
}

inline CheckResult check_modular(const CosetSequence& seq, int samples, std::uint64_t seed,
                                 double tol) {
    std::string name = "modular-triviality " + sequence_to_json(seq)["pairs"].dump();
    return timed_check(name, [&] { return delta_triviality_check(seq, samples, seed, tol); });
}

// ------------------------------------------------------------- commands ---

inline nlohmann::ordered_json classification_json(const InducedParams& params, int twist) {
    nlohmann::ordered_json out;
    out["shalika"] = params.has_shalika();
    if (params.m) out["m"] = *params.m;
    else out["m"] = nullptr;
    if (params.L) out["L"] = *params.L;
    else out["L"] = nullptr;
    out["N"] = params.N;
    out["lambda"] = params.lambda;
    out["nonvanishing"] =
        params.has_shalika() && nonvanishing_predicate(twist, *params.L, params.N.back());
    out["twist"] = twist;
    if (params.has_shalika()) {
        auto table = nlohmann::ordered_json::array();
        const int reach = params.N.back() + std::abs(*params.L) + 2;
        for (int l0 = -reach; l0 <= reach; ++l0) {
            nlohmann::ordered_json row;
            row["twist"] = l0;
            row["nonvanishing"] = nonvanishing_predicate(l0, *params.L, params.N.back());
            table.push_back(std::move(row));
        }
        out["nonvanishing_table"] = std::move(table);
        if (params.m) {
            auto cc = central_character_data(*params.m, *params.L, params.n);
            out["central_character"] = {{"modulus_exponent", cc.first}, {"circle_index", cc.second}};
        }
    }
    return out;
}

/// Parse and execute one invocation; the report goes to `out`, diagnostics
/// and the summary to `err`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOptions globals;
    VerificationReport report;

    CLI::App app{"exact and sampled verification of unitary-group polynomial identities"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--seed", globals.seed, "base RNG seed");
    app.add_option("--tol", globals.tol, "numeric tolerance");
    app.add_option("--samples", globals.samples, "Haar sample count");

    // classify
    auto* classify = app.add_subcommand("classify", "weight pipeline and pairing classification");
    classify->fallthrough();
    std::string weights_csv, l_csv;
    int twist = 0;
    double u0 = 0.0;
    auto* wopt = classify->add_option("--weights", weights_csv, "4n integers: nu then nu-bar");
    auto* lopt = classify->add_option("--l", l_csv, "2n strictly decreasing integers");
    classify->add_option("--twist", twist, "twist index for the nonvanishing predicate");
    auto* u0opt = classify->add_option(
        "--u0", u0, "continuous exponent of the twist character (metadata, unused by predicates)");

    // construct
    auto* construct = app.add_subcommand("construct", "build a vector and write it to a file");
    construct->fallthrough();
    int cn = 0, cL = 0, cl = 0;
    std::string cN_csv, out_path;
    construct->add_option("--n", cn, "half size")->required();
    construct->add_option("--N", cN_csv, "strictly decreasing positive weights")->required();
    construct->add_option("--L", cL, "pairing level")->required();
    construct->add_option("--l", cl, "twist index")->required();
    construct->add_option("--out", out_path, "output polynomial file")->required();

    // casimir
    auto* casimir_cmd = app.add_subcommand("casimir", "apply the Casimir operator to a polynomial file");
    casimir_cmd->fallthrough();
    std::string in_path, casimir_out;
    casimir_cmd->add_option("--in", in_path, "input polynomial file")->required();
    casimir_cmd->add_option("--out", casimir_out, "output polynomial file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    verify->require_subcommand(1);
    int vn = 1, vk = 0, vL = 0, vl = 0;
    std::string vN_csv;
    auto* v_eigen = verify->add_subcommand("eigen", "Casimir eigenvalue congruence for F_k");
    v_eigen->fallthrough();
    v_eigen->add_option("--n", vn, "half size")->required();
    v_eigen->add_option("--k", vk, "fundamental index (default: all k <= n)");
    auto* v_phi = verify->add_subcommand("phi", "Casimir eigenvalue congruence for the pairings");
    v_phi->fallthrough();
    v_phi->add_option("--n", vn, "half size")->required();
    auto* v_bracket = verify->add_subcommand("bracket", "commutator identity on random polynomials");
    v_bracket->fallthrough();
    v_bracket->add_option("--n", vn, "half size")->required();
    auto* v_central = verify->add_subcommand("centrality", "Casimir centrality on random polynomials");
    v_central->fallthrough();
    v_central->add_option("--n", vn, "half size")->required();
    auto* v_equiv = verify->add_subcommand("equivariance", "torus and block equivariance of a vector");
    v_equiv->fallthrough();
    v_equiv->add_option("--n", vn, "half size")->required();
    v_equiv->add_option("--N", vN_csv, "weights")->required();
    v_equiv->add_option("--L", vL, "pairing level")->required();
    v_equiv->add_option("--l", vl, "twist index")->required();
    auto* v_factor = verify->add_subcommand("factorization", "exact block factorization of a vector");
    v_factor->fallthrough();
    v_factor->add_option("--n", vn, "half size")->required();
    v_factor->add_option("--N", vN_csv, "weights")->required();
    v_factor->add_option("--L", vL, "pairing level")->required();
    v_factor->add_option("--l", vl, "twist index")->required();
    auto* v_pairing = verify->add_subcommand("pairing-lemma", "exact reduction of the row pairings");
    v_pairing->fallthrough();
    v_pairing->add_option("--n", vn, "half size")->required();

    // cosets
    auto* cosets = app.add_subcommand("cosets", "double-coset data");
    cosets->fallthrough();
    cosets->require_subcommand(1);
    int qn = 2;
    bool offdiag = false;
    std::string seq_path;
    auto* c_list = cosets->add_subcommand("list", "enumerate sequences");
    c_list->fallthrough();
    c_list->add_option("--n", qn, "half size")->required();
    c_list->add_flag("--offdiag", offdiag, "only sequences without signed fixed points");
    auto* c_check = cosets->add_subcommand("modular-check", "modular character triviality");
    c_check->fallthrough();
    c_check->add_option("--n", qn, "half size")->required();
    c_check->add_option("--seq", seq_path, "check one sequence from a JSON file");

    std::vector<const char*> argv;
    argv.push_back("gl2n");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*classify) {
            report.command = "classify";
            InducedParams params;
            if (wopt->count() > 0 && lopt->count() > 0)
                throw CLI::ValidationError("--weights and --l are mutually exclusive");
            if (wopt->count() > 0) {
                auto w = detail::parse_int_list(weights_csv);
                if (w.size() % 4 != 0) throw CLI::ValidationError("--weights needs 4n integers");
                HighestWeight hw;
                hw.nu.assign(w.begin(), w.begin() + w.size() / 2);
                hw.nu_bar.assign(w.begin() + w.size() / 2, w.end());
                report.inputs["weights"] = detail::int_list_json(w);
                params = classify_weight(hw);
            } else if (lopt->count() > 0) {
                auto l = detail::parse_int_list(l_csv);
                report.inputs["l"] = detail::int_list_json(l);
                params = classify_exponents(l);
            } else {
                throw CLI::ValidationError("classify needs --weights or --l");
            }
            report.inputs["twist"] = twist;
            if (u0opt->count() > 0) report.inputs["u0"] = u0;
            report.result = classification_json(params, twist);
            report.checks.push_back(
                {"classification", CheckStatus::certified_exact, 0.0, 0, 0, 0.0});
        } else if (*construct) {
            report.command = "construct";
            TestVectorSpec spec{cn, detail::parse_int_list(cN_csv), cL, cl};
            spec.validate();
            if (!spec.buildable())
                throw CLI::ValidationError("twist outside the construction range: |l+L| > N_n");
            report.inputs = {{"n", cn}, {"N", detail::int_list_json(spec.N)}, {"L", cL}, {"l", cl},
                             {"out", out_path}};
            auto check = timed_check("construct", [&] {
                Polynomial vec = cohomological_vector(spec);
                detail::write_file(out_path, polynomial_to_string(vec));
                report.result = {{"terms", vec.term_count()}, {"degree", vec.degree()}};
                return CongruenceVerdict::exact();
            });
            report.checks.push_back(std::move(check));
        } else if (*casimir_cmd) {
            report.command = "casimir";
            report.inputs = {{"in", in_path}, {"out", casimir_out}};
            auto check = timed_check("casimir", [&] {
                Polynomial p = polynomial_from_string(detail::read_file(in_path));
                Polynomial q = apply_casimir(p);
                detail::write_file(casimir_out, polynomial_to_string(q));
                report.result = {{"terms", q.term_count()}, {"degree", q.degree()}};
                return CongruenceVerdict::exact();
            });
            report.checks.push_back(std::move(check));
        } else if (*verify) {
            if (*v_eigen) {
                report.command = "verify eigen";
                report.inputs = {{"n", vn}, {"k", vk}};
                if (vk != 0) {
                    report.checks.push_back(check_fundamental_eigen(vn, vk, globals.policy()));
                } else {
                    for (int k = 1; k <= vn; ++k)
                        report.checks.push_back(check_fundamental_eigen(vn, k, globals.policy()));
                }
            } else if (*v_phi) {
                report.command = "verify phi";
                report.inputs = {{"n", vn}};
                for (int j = 1; j <= 2 * vn; ++j)
                    for (int l = 1; l <= 2 * vn; ++l)
                        if (j != l) report.checks.push_back(check_phi_eigen(vn, j, l));
            } else if (*v_bracket) {
                report.command = "verify bracket";
                report.inputs = {{"n", vn}, {"trials", 100}};
                report.checks.push_back(check_bracket(vn, 100, globals.seed));
            } else if (*v_central) {
                report.command = "verify centrality";
                report.inputs = {{"n", vn}, {"trials", 20}};
                report.checks.push_back(check_centrality(vn, 20, globals.seed));
            } else if (*v_equiv) {
                report.command = "verify equivariance";
                TestVectorSpec spec{vn, detail::parse_int_list(vN_csv), vL, vl};
                spec.validate();
                report.inputs = {{"n", vn}, {"N", detail::int_list_json(spec.N)}, {"L", vL}, {"l", vl}};
                report.checks.push_back(
                    check_equivariance(spec, globals.samples, globals.seed, globals.tol));
            } else if (*v_factor) {
                report.command = "verify factorization";
                TestVectorSpec spec{vn, detail::parse_int_list(vN_csv), vL, vl};
                spec.validate();
                report.inputs = {{"n", vn}, {"N", detail::int_list_json(spec.N)}, {"L", vL}, {"l", vl}};
                report.checks.push_back(check_factorization(spec));
            } else if (*v_pairing) {
                report.command = "verify pairing-lemma";
                report.inputs = {{"n", vn}};
                report.checks.push_back(check_pairing_lemma(vn));
            }
        } else if (*cosets) {
            if (*c_list) {
                report.command = "cosets list";
                report.inputs = {{"n", qn}, {"offdiag", offdiag}};
                auto seqs = enumerate_sequences(qn, offdiag);
                auto arr = nlohmann::ordered_json::array();
                for (const auto& s : seqs) arr.push_back(sequence_to_json(s));
                report.result = {{"count", seqs.size()}, {"sequences", std::move(arr)}};
                report.checks.push_back({"enumeration", CheckStatus::certified_exact, 0.0, 0, 0, 0.0});
            } else if (*c_check) {
                report.command = "cosets modular-check";
                report.inputs = {{"n", qn}};
                std::vector<CosetSequence> seqs;
                if (!seq_path.empty()) {
                    report.inputs["seq"] = seq_path;
                    seqs.push_back(sequence_from_json(
                        nlohmann::ordered_json::parse(detail::read_file(seq_path))));
                } else {
                    seqs = enumerate_sequences(qn, true);
                }
                std::uint64_t s = globals.seed;
                for (const auto& seq : seqs) {
                    report.checks.push_back(check_modular(seq, globals.samples, s, globals.tol));
                    s += 10000;
                }
            }
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    out << report.to_json().dump(2) << '\n';
    err << report.command << ": " << report.checks.size() << " check(s)\n";
    for (const auto& c : report.checks)
        err << "  [" << (c.passed() ? "ok" : "FAIL") << "] " << c.name << " (" << to_string(c.status)
            << ", err=" << std::scientific << std::setprecision(2) << c.max_abs_error << ")\n";
    err << "overall: " << (report.overall_pass() ? "pass" : "fail") << '\n';
    return report.overall_pass() ? 0 : 1;
}

}  // namespace gl2n::cli
