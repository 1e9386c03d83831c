#include "ybx/acceptance.hpp"
#include "ybx/braided.hpp"
#include "ybx/diffcalc.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/graphs.hpp"
#include "ybx/parallel.hpp"
#include "ybx/veronese_segre.hpp"
#include "ybx/yb_algebra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

ybx::SolutionTable load_solution(const std::string& src) {
    std::string text = src;
    if (!src.empty() && src[0] != '{') {
        std::ifstream in(src);
        if (!in) throw std::runtime_error("cannot open solution file: " + src);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return ybx::solution_from_json_text(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int finish(const std::vector<ybx::Certificate>& certs, const std::string& command,
           unsigned long long seed, bool as_json) {
    bool all = true;
    for (const auto& c : certs) all = all && c.pass;
    if (as_json) {
        emit(ybx::report_envelope(command, seed, certs));
    } else {
        for (const auto& c : certs)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.check << "\n";
    }
    return all ? 0 : 1;
}

std::vector<int> parse_perm(const std::string& text) {
    std::vector<int> f;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(std::stoi(tok));
    return f;
}

std::vector<ybx::Rational> parse_rationals(const std::string& text) {
    std::vector<ybx::Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(ybx::Rational(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-theoretic Yang-Baxter solutions, their quadratic algebras, and the "
                 "verification suite"};
    app.require_subcommand(1);

    std::string source;
    int degree = 6;
    unsigned long long seed = ybx::kDefaultSeed;
    bool as_json = false;
    bool dot = false;

    // check
    auto* cmd_check = app.add_subcommand("check", "braid, idempotency and nondegeneracy of a solution");
    cmd_check->add_option("-f,--file", source, "inline JSON or a path to a JSON file")->required();
    cmd_check->add_flag("--json", as_json, "emit a JSON report");

    // algebra
    auto* cmd_algebra = app.add_subcommand("algebra", "basis, Hilbert function, graphs and annihilator");
    bool want_gb = false, want_hilbert = false, want_graph = false, want_ann = false;
    cmd_algebra->add_option("-f,--file", source, "inline JSON or a path to a JSON file")->required();
    cmd_algebra->add_option("-D,--degree", degree, "degree bound")->capture_default_str();
    cmd_algebra->add_flag("--gb", want_gb, "print the reduced basis");
    cmd_algebra->add_flag("--hilbert", want_hilbert, "print graded dimensions");
    cmd_algebra->add_flag("--graph", want_graph, "compute growth and global dimension");
    cmd_algebra->add_flag("--annihilator", want_ann, "print the annihilator basis");
    cmd_algebra->add_flag("--dot", dot, "emit DOT for both graphs");
    cmd_algebra->add_flag("--json", as_json, "emit a JSON report");

    // veronese-solution
    auto* cmd_vsol = app.add_subcommand("veronese-solution", "the induced solution on degree-d normal words");
    int vd = 2;
    cmd_vsol->add_option("-f,--file", source, "inline JSON or a path to a JSON file")->required();
    cmd_vsol->add_option("-d", vd, "degree of the normal words")->capture_default_str();

    // veronese
    auto* cmd_ver = app.add_subcommand("veronese", "regrading certificate");
    int vn = 3, vdd = 2, vD = 4;
    bool emit_presentation = false;
    cmd_ver->add_option("-n", vn, "generators")->capture_default_str();
    cmd_ver->add_option("-d", vdd, "regrading degree")->capture_default_str();
    cmd_ver->add_option("-D,--degree", vD, "certified degree")->capture_default_str();
    cmd_ver->add_flag("--emit-presentation", emit_presentation, "print the relations");

    // segre
    auto* cmd_seg = app.add_subcommand("segre", "pair-product certificate");
    int sm = 2, sn = 2, sD = 4;
    cmd_seg->add_option("-m", sm, "left generators")->capture_default_str();
    cmd_seg->add_option("-n", sn, "right generators")->capture_default_str();
    cmd_seg->add_option("-D,--degree", sD, "certified degree")->capture_default_str();
    cmd_seg->add_flag("--emit-presentation", emit_presentation, "print the relations");

    // calculus
    auto* cmd_calc = app.add_subcommand("calculus", "first-order differential calculi");
    std::string params_text = "1,0,1,0";
    std::string calc_check = "family";
    std::string monoid_file;
    int frt_n = 0;
    std::vector<std::string> fermionic_args;
    cmd_calc->add_option("--params", params_text, "alpha,beta,lambda,mu")->capture_default_str();
    cmd_calc->add_option("--check", calc_check, "family|covariance|connected|omega2")->capture_default_str();
    cmd_calc->add_option("--monoid-graded", monoid_file, "JSON data for the monoid-graded calculus");
    cmd_calc->add_option("--frt", frt_n, "emit the quadratic bialgebra relations for n generators");
    cmd_calc->add_option("--fermionic", fermionic_args,
                         "n and a one-line permutation, e.g. 3 2,3,1")->expected(2);

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "named certificate batteries");
    std::string suite_name;
    int un = 3, um = 2, ud = 2, uD = 4;
    cmd_suite->add_option("name", suite_name, "veronese|segre|calculus|frt|fermionic|paper-all")
        ->required();
    cmd_suite->add_option("-n", un, "generators")->capture_default_str();
    cmd_suite->add_option("-m", um, "left generators")->capture_default_str();
    cmd_suite->add_option("-d", ud, "regrading degree")->capture_default_str();
    cmd_suite->add_option("-D,--degree", uD, "certified degree")->capture_default_str();
    cmd_suite->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    cmd_suite->add_flag("--json", as_json, "emit a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_check) {
            auto s = load_solution(source);
            ybx::Certificate cert;
            cert.check = "solution-axioms";
            cert.statement = "braid relation, idempotency, nondegeneracy";
            cert.pass = true;
            bool braid = ybx::check_braid(s);
            bool idem = ybx::check_idempotent(s);
            auto nd = ybx::check_nondegenerate(s);
            cert.parameters = {{"n", s.n}};
            cert.details["braid"] = braid;
            cert.details["idempotent"] = idem;
            cert.details["left_nondegenerate"] = nd.left;
            cert.details["right_nondegenerate"] = nd.right;
            if (auto f = ybx::recover_permutation(s)) cert.details["permutation"] = *f;
            if (auto bad = ybx::braid_counterexample(s))
                cert.details["braid_counterexample"] = {(*bad)[0] + 1, (*bad)[1] + 1,
                                                        (*bad)[2] + 1};
            cert.require(braid, "braid relation");
            cert.require(idem, "idempotency");
            return finish({cert}, "check", seed, as_json);
        }

        if (*cmd_algebra) {
            auto s = load_solution(source);
            if (degree < 2) throw CLI::ValidationError("degree", "-D must be at least 2");
            auto presentation = ybx::orbit_relations(s);
            auto gb = ybx::groebner_of(presentation, degree);
            json out;
            out["command"] = "algebra";
            out["n"] = s.n;
            out["degree_bound"] = degree;
            if (want_gb) {
                json rules = json::array();
                for (const auto& r : gb.rules) rules.push_back(r.str());
                out["groebner_basis"] = rules;
                out["complete"] = gb.complete;
            }
            if (want_hilbert) out["hilbert"] = ybx::hilbert_function(gb, degree);
            if (want_graph || dot) {
                auto gn = ybx::graph_of_normal_words(gb);
                auto gw = gn.dual();
                auto growth = ybx::gk_dimension(gn);
                auto gld = ybx::global_dimension(gw);
                out["growth"] = growth.kind == ybx::GrowthResult::Kind::Exponential
                                    ? json("exponential")
                                    : json({{"polynomial_degree", growth.degree}});
                out["global_dimension"] =
                    gld.kind == ybx::GlDimResult::Kind::Infinite ? json("infinite")
                                                                 : json(gld.value);
                if (dot) {
                    std::ofstream fn("gamma_n.dot"), fw("gamma_w.dot");
                    fn << gn.to_dot("GammaN");
                    fw << gw.to_dot("GammaW");
                    out["dot_files"] = {"gamma_n.dot", "gamma_w.dot"};
                }
            }
            if (want_ann) {
                json basis = json::array();
                for (const auto& a : ybx::annihilator_basis(s.n, degree))
                    basis.push_back(a.str());
                out["annihilator_basis"] = basis;
            }
            emit(out);
            return 0;
        }

        if (*cmd_vsol) {
            auto s = load_solution(source);
            auto vs = ybx::d_veronese_solution(s, vd);
            json out;
            out["command"] = "veronese-solution";
            out["d"] = vd;
            out["order"] = vs.n;
            out["solution"] = ybx::solution_to_json(vs);
            emit(out);
            return 0;
        }

        if (*cmd_ver) {
            auto cert = ybx::verify_veronese_embedding(vn, vdd, vD);
            if (emit_presentation) {
                auto data = ybx::veronese_presentation(vn, vdd);
                for (const auto& r : data.relations.relations) std::cout << r.str() << "\n";
            }
            return finish({cert}, "veronese", seed, true);
        }

        if (*cmd_seg) {
            auto prod = ybx::verify_segre_product(sm, sn, sD);
            auto map = ybx::verify_segre_map(sm, sn, sD);
            if (emit_presentation) {
                auto data = ybx::segre_presentation(sm, sn);
                for (const auto& r : data.canonical.relations) std::cout << r.str() << "\n";
            }
            return finish({prod, map}, "segre", seed, true);
        }

        if (*cmd_calc) {
            std::vector<ybx::Certificate> certs;
            if (frt_n > 0) {
                auto B = ybx::frt_bialgebra(frt_n);
                json rels = json::array();
                for (const auto& r : B.relations) rels.push_back(r.str());
                json out;
                out["command"] = "calculus";
                out["frt_relations"] = rels;
                emit(out);
                return 0;
            }
            if (!fermionic_args.empty()) {
                int n = std::stoi(fermionic_args[0]);
                auto cert = ybx::fermionic_consistency(n, parse_perm(fermionic_args[1]));
                return finish({cert}, "calculus", seed, true);
            }
            if (!monoid_file.empty()) {
                std::ifstream in(monoid_file);
                if (!in) throw std::runtime_error("cannot open " + monoid_file);
                json data = json::parse(in);
                ybx::MonoidCalculusData md;
                md.n = data.at("n").get<int>();
                auto rat = [](const json& v) {
                    return v.is_string() ? ybx::Rational(v.get<std::string>())
                                         : ybx::Rational(v.get<long long>());
                };
                for (const auto& v : data.at("xi")) md.xi.push_back(rat(v));
                for (const auto& row : data.at("u")) {
                    std::vector<ybx::Rational> r;
                    for (const auto& v : row) r.push_back(rat(v));
                    md.u.push_back(r);
                }
                for (const auto& v : data.at("theta")) md.theta.push_back(rat(v));
                md.mu = rat(data.at("mu"));
                auto res = ybx::monoid_graded_calculus(md);
                json out;
                out["command"] = "calculus";
                out["generic"] = res.generic;
                out["grading_compatible"] = res.grading_compatible;
                out["left_annihilation"] = res.left_annihilation;
                json gm = json::array();
                for (const auto& row : res.gamma) {
                    json r = json::array();
                    for (const auto& v : row) r.push_back(v.str());
                    gm.push_back(r);
                }
                out["gamma"] = gm;
                emit(out);
                return res.relations_independent_of_k && res.grading_compatible ? 0 : 1;
            }
            auto pf = parse_rationals(params_text);
            if (pf.size() != 4) throw CLI::ValidationError("--params", "need four values");
            ybx::FamilyParams p{pf[0], pf[1], pf[2], pf[3]};
            ybx::Certificate cert;
            cert.parameters = {{"alpha", pf[0].str()}, {"beta", pf[1].str()},
                               {"lambda", pf[2].str()}, {"mu", pf[3].str()}};
            cert.pass = true;
            if (calc_check == "family") {
                cert.check = "calculus-family-membership";
                cert.statement = "the parameter tuple satisfies the entry equations and "
                                 "represents the algebra";
                cert.require(ybx::verify_family_equations(p), "entry equations");
                cert.require(ybx::check_commutation_rep(ybx::family_rep(p),
                                                        ybx::canonical_presentation(2)),
                             "commutation representation");
            } else if (calc_check == "covariance") {
                cert.check = "calculus-covariance";
                cert.statement = "covariance of the calculus under the quadratic bialgebra";
                cert.pass = ybx::covariance_condition_check(p);
            } else if (calc_check == "connected") {
                cert.check = "calculus-connected";
                cert.statement = "kernel of d is the constants up to degree 10";
                cert.pass = ybx::connectedness_check(ybx::family_rep(p), 10);
            } else if (calc_check == "omega2") {
                cert.check = "calculus-omega2";
                cert.statement = "degree-2 wedge relations of the prolongation";
                auto ws = ybx::omega_max_degree2(p);
                json rels = json::array();
                for (const auto& w : ws) {
                    json r = json::array();
                    for (const auto& c : w.coeff) r.push_back(c.str());
                    rels.push_back(r);
                }
                cert.details["wedge_relations"] = rels;
                cert.pass = true;
            } else {
                throw CLI::ValidationError("--check", "unknown check " + calc_check);
            }
            certs.push_back(cert);
            return finish(certs, "calculus", seed, true);
        }

        if (*cmd_suite) {
            std::vector<ybx::Certificate> certs;
            if (suite_name == "veronese") {
                certs.push_back(ybx::verify_veronese_embedding(un, ud, uD));
            } else if (suite_name == "segre") {
                certs.push_back(ybx::verify_segre_product(um, un, uD));
                certs.push_back(ybx::verify_segre_map(um, un, uD));
            } else if (suite_name == "calculus") {
                ybx::Certificate cert;
                cert.check = "calculus-family";
                cert.statement = "entry equations hold identically in the parameters";
                cert.pass = ybx::verify_family_equations_symbolic();
                certs.push_back(cert);
            } else if (suite_name == "frt") {
                certs.push_back(ybx::verify_comodule_algebra(un, uD));
            } else if (suite_name == "fermionic") {
                certs.push_back(ybx::fermionic_consistency(un));
            } else if (suite_name == "paper-all") {
                certs = ybx::acceptance_suite(seed);
            } else {
                throw CLI::ValidationError("name", "unknown suite " + suite_name);
            }
            return finish(certs, "suite " + suite_name, seed, as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
