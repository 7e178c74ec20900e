// Command-line front end: construct the extremal polynomial, verify
// candidates against the growth and value bounds, factor nonnegative
// Laurent polynomials, run the LP searches, and tabulate constants.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "bernlax/chebyshev.hpp"
#include "bernlax/circle_scan.hpp"
#include "bernlax/errors.hpp"
#include "bernlax/factorization.hpp"
#include "bernlax/inequalities.hpp"
#include "bernlax/io.hpp"
#include "bernlax/search.hpp"
#include "bernlax/transforms.hpp"

namespace {

using bernlax::Complex;
using bernlax::ComplexPoly;
using bernlax::LaurentPoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json optimizer_json(const ComplexPoly& p) {
    return bernlax::polynomial_to_json(p);
}

json search_result_json(const bernlax::SearchResult& r) {
    json trace = json::array();
    for (const auto& round : r.trace) {
        trace.push_back({{"round", round.round},
                         {"constraints", round.constraints},
                         {"objective", round.objective},
                         {"worst_violation", round.worst_violation}});
    }
    json active = json::array();
    for (const auto& a : r.active_detail) {
        active.push_back({{"family", a.family},
                          {"s", bernlax::json_real(a.s)},
                          {"phi", a.phi},
                          {"slack", a.slack}});
    }
    return json{{"optimal_value", r.optimal_value},
                {"optimizer", optimizer_json(r.optimizer)},
                {"active_points", r.active_points},
                {"active_constraints", active},
                {"iterations", r.iterations},
                {"converged", r.converged},
                {"final_violation", r.final_violation},
                {"trace", trace}};
}

void write_active_csv(const std::string& path,
                      const bernlax::SearchResult& r) {
    std::ofstream out(path);
    if (!out) throw bernlax::ParseError("cannot open for writing: " + path);
    out << "index,family,s,phi,slack\n";
    int index = 0;
    for (const auto& a : r.active_detail) {
        out << index++ << ',' << a.family << ',' << fmt17(a.s) << ','
            << fmt17(a.phi) << ',' << fmt17(a.slack) << "\n";
    }
}

void emit_json(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw bernlax::ParseError("cannot open for writing: " + out_path);
        }
        out << j.dump(2) << "\n";
    }
}

int cmd_extremal(int n, const std::string& out_path, double cluster_tol,
                 bool as_json) {
    const bernlax::ExactPoly p = bernlax::extremal_polynomial(n);
    const ComplexPoly pf = p.to_complex_poly();
    bernlax::save_json_file(out_path, bernlax::polynomial_to_json(pf));

    json zero;
    if (n >= 3) {
        const bernlax::ZeroStructureReport zs =
            bernlax::zero_structure(n, cluster_tol);
        json roots = json::array();
        for (const Complex& r : zs.roots) {
            roots.push_back(bernlax::json_complex(r));
        }
        zero = json{{"all_positive_real", zs.all_positive_real},
                    {"all_double", zs.all_double},
                    {"roots", roots}};
    } else {
        zero = nullptr;  // constant polynomial, no roots to analyze
    }

    const json report = bernlax::make_run_report(
        "extremal", json{{"n", n}, {"out", out_path}},
        json{{"p0", static_cast<long long>(bernlax::extremal_value(n))},
             {"degree", pf.degree()},
             {"zero_structure", zero}},
        json{{"tol_cluster", cluster_tol}});
    bernlax::save_json_file(out_path + ".report.json", report);
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "wrote p_" << n << " (degree " << pf.degree()
                  << ", p(0) = " << n * n << ") to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, int n, double tol_cert,
               bool as_json) {
    const bernlax::PolynomialFileValue value =
        bernlax::load_polynomial_file(path);
    if (!std::holds_alternative<ComplexPoly>(value)) {
        std::cerr << "verify: input must be an ordinary polynomial file\n";
        return kExitUsage;
    }
    const ComplexPoly p = std::get<ComplexPoly>(value);

    json outputs;
    bool ok = true;
    std::string verdict;

    if (p.degree() > n - 1) {
        // Degree n or higher cannot satisfy the growth bound at large s.
        ok = false;
        verdict = "degree " + std::to_string(p.degree()) +
                  " exceeds n - 1; growth bound fails at infinity";
        outputs = json{{"admissible", false},
                       {"degree", p.degree()},
                       {"p0_modulus", std::abs(p.coeff(0))}};
    } else {
        const bernlax::CandidateInput cand{p, n};
        const bernlax::BoundReport report = bernlax::bound_report(cand);
        const bernlax::AdmissibilityReport adm =
            bernlax::admissibility_check(cand);
        const bool admissible = adm.worst_margin >= -tol_cert;
        outputs = json{
            {"admissible", admissible},
            {"positive_on_halfline", report.positive_on_halfline},
            {"worst_s", bernlax::json_real(adm.worst_s)},
            {"worst_margin", adm.worst_margin},
            {"p0_modulus", report.p0_modulus},
            {"sharp_bound", report.sharp_bound},
            {"weak_bound", report.weak_bound},
            {"nazarov_sodin_bound", report.nazarov_sodin_bound},
            {"naive_bound", report.naive_bound},
            {"sharp_margin", report.sharp_margin},
            {"weak_margin", report.weak_margin},
            {"nazarov_sodin_margin", report.nazarov_sodin_margin},
            {"naive_margin", report.naive_margin}};
        if (!admissible) {
            ok = false;
            verdict = "not admissible: sup s|p(s)|/(1+s)^n = " +
                      fmt17(1.0 - adm.worst_margin) + " > 1 near s = " +
                      fmt17(adm.worst_s);
        } else if (report.positive_on_halfline) {
            if (report.sharp_margin < -tol_cert * report.sharp_bound) {
                ok = false;
                verdict = "sharp bound violated: |p(0)| = " +
                          fmt17(report.p0_modulus) + " > n^2 = " +
                          fmt17(report.sharp_bound) + " (margin " +
                          fmt17(report.sharp_margin) + ")";
            }
        } else if (report.weak_margin < -tol_cert * report.weak_bound) {
            ok = false;
            verdict = "complex-case bound violated: |p(0)| = " +
                      fmt17(report.p0_modulus) + " > 2n^2 - n = " +
                      fmt17(report.weak_bound) + " (margin " +
                      fmt17(report.weak_margin) + ")";
        }
    }
    outputs["verified"] = ok;

    if (as_json) {
        std::cout << bernlax::make_run_report(
                         "verify", json{{"poly", path}, {"n", n}},
                         outputs, json{{"tol_cert", tol_cert}})
                         .dump(2)
                  << "\n";
    } else if (ok) {
        std::cout << "verified: all applicable bounds hold\n";
    } else {
        std::cout << "FAILED: " << verdict << "\n";
    }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_factor(const std::string& path, const std::string& out_path,
               double tol_nonneg, bool as_json) {
    const bernlax::PolynomialFileValue value =
        bernlax::load_polynomial_file(path);
    if (!std::holds_alternative<LaurentPoly>(value)) {
        std::cerr << "factor: input must be a laurent polynomial file\n";
        return kExitUsage;
    }
    const LaurentPoly f = std::get<LaurentPoly>(value);
    if (!f.is_hermitian()) {
        std::cerr << "factor: input is not Hermitian\n";
        return kExitUsage;
    }

    bernlax::SpectralFactor factor;
    try {
        factor = bernlax::fejer_riesz(f, tol_nonneg);
    } catch (const bernlax::NotNonnegativeError& e) {
        std::cerr << "factor: " << e.what()
                  << " (witness angle " << fmt17(e.witness_angle) << ")\n";
        return kExitMathFailure;
    }

    bernlax::save_json_file(out_path,
                                  bernlax::polynomial_to_json(factor.P));
    const json report = bernlax::make_run_report(
        "factor", json{{"laurent", path}, {"out", out_path}},
        json{{"degree", factor.P.degree()},
             {"residual", factor.residual},
             {"min_root_modulus", bernlax::json_real(factor.min_root_modulus)}},
        json{{"tol_nonneg", tol_nonneg}});
    bernlax::save_json_file(out_path + ".report.json", report);
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "wrote spectral factor (degree " << factor.P.degree()
                  << ", residual " << fmt17(factor.residual) << ") to "
                  << out_path << "\n";
    }
    return kExitOk;
}

int cmd_search(const bernlax::SearchConfig& cfg, const std::string& mode,
               int perturbations, const std::string& out_path,
               const std::string& csv_path, bool as_json) {
    const json tolerances = json{{"tol_violation", cfg.violation_tol},
                                 {"initial_grid", cfg.initial_grid},
                                 {"fine_grid", cfg.fine_grid},
                                 {"seed", cfg.seed}};
    const json inputs = json{{"n", cfg.n},
                             {"mode", mode},
                             {"phase_count", cfg.phase_count},
                             {"perturbations", perturbations},
                             {"full_degree", cfg.full_degree_cap}};

    bool converged = false;
    json outputs;
    bernlax::SearchResult result;
    if (mode == "real" || mode == "complex") {
        result = mode == "real" ? bernlax::extremal_lp(cfg)
                                : bernlax::extremal_complex_lp(cfg);
        converged = result.converged;
        outputs = search_result_json(result);
        if (!csv_path.empty()) write_active_csv(csv_path, result);
    } else {  // uniqueness
        const bernlax::UniquenessReport probe =
            bernlax::uniqueness_probe(cfg, perturbations);
        converged = probe.all_converged;
        json optimizers = json::array();
        for (const ComplexPoly& p : probe.optimizers) {
            optimizers.push_back(optimizer_json(p));
        }
        outputs = json{{"optimizers", optimizers},
                       {"max_pairwise_distance", probe.max_pairwise_distance},
                       {"matches_extremal", probe.matches_extremal},
                       {"all_converged", probe.all_converged}};
    }

    const json report =
        bernlax::make_run_report("search", inputs, outputs, tolerances);
    if (!out_path.empty()) emit_json(report, out_path);
    if (as_json || out_path.empty()) emit_json(report, "");
    return converged ? kExitOk : kExitMathFailure;
}

int cmd_constants(int d_max) {
    std::cout << "d,new,old,ratio,note\n";
    for (int d = 1; d <= d_max; ++d) {
        const bernlax::CarlesonConstants c = bernlax::carleson_constant(d);
        std::cout << d << ',' << fmt17(c.new_constant) << ','
                  << fmt17(c.old_constant) << ','
                  << fmt17(c.old_constant / c.new_constant) << ','
                  << (d == 1 ? "A <= 4B, optimal" : "") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp Bernstein-type bounds on the positive half-line: "
                 "extremal construction, certification, spectral "
                 "factorization, and LP recovery"};
    app.require_subcommand(1);

    // extremal
    auto* extremal = app.add_subcommand(
        "extremal", "construct the extremal polynomial p_n");
    int ex_n = 0;
    std::string ex_out = "extremal.json";
    double ex_cluster = 1e-6;
    bool ex_json = false;
    extremal->add_option("--n", ex_n, "growth exponent (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    extremal->add_option("--out", ex_out, "output polynomial file");
    extremal->add_option("--tol-cluster", ex_cluster,
                         "root clustering tolerance for the report");
    extremal->add_flag("--json", ex_json, "print the run report as JSON");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "verify a candidate against the growth and value bounds");
    std::string vf_path;
    int vf_n = 0;
    double vf_tol = 1e-8;
    bool vf_json = false;
    verify->add_option("poly", vf_path, "polynomial file")->required();
    verify->add_option("--n", vf_n, "growth exponent (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-cert", vf_tol, "certification tolerance");
    verify->add_flag("--json", vf_json, "print the run report as JSON");

    // factor
    auto* factor = app.add_subcommand(
        "factor", "spectral factorization of a nonnegative Laurent file");
    std::string fc_path;
    std::string fc_out = "factor.json";
    double fc_tol = 1e-9;
    bool fc_json = false;
    factor->add_option("laurent", fc_path, "laurent polynomial file")
        ->required();
    factor->add_option("--out", fc_out, "output polynomial file");
    factor->add_option("--tol-nonneg", fc_tol,
                       "allowed dip below zero on the circle");
    factor->add_flag("--json", fc_json, "print the run report as JSON");

    // search
    auto* search = app.add_subcommand(
        "search", "semi-infinite LP recovery of the sharp constant");
    bernlax::SearchConfig cfg;
    std::string sr_mode = "real";
    int sr_perturbations = 8;
    std::string sr_out;
    std::string sr_csv;
    bool sr_json = false;
    search->add_option("--n", cfg.n, "growth exponent (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--mode", sr_mode, "real | complex | uniqueness")
        ->check(CLI::IsMember({"real", "complex", "uniqueness"}));
    search->add_option("--initial-grid", cfg.initial_grid,
                       "initial abscissa count (default max(2n+2, 64))");
    search->add_option("--rounds", cfg.max_exchange_rounds,
                       "exchange round cap");
    search->add_option("--tol-violation", cfg.violation_tol,
                       "fine-grid violation tolerance");
    search->add_option("--phase-count", cfg.phase_count,
                       "half-plane cuts per abscissa (complex mode)");
    search->add_option("--fine-grid", cfg.fine_grid,
                       "fine scan angle count");
    search->add_option("--perturbations", sr_perturbations,
                       "perturbed re-runs (uniqueness mode)");
    search->add_option("--seed", cfg.seed, "perturbation seed");
    search->add_flag("--full-degree", cfg.full_degree_cap,
                     "keep the top coefficient for even n");
    search->add_option("--out", sr_out, "write the run report here");
    search->add_option("--csv", sr_csv, "write the active-point table here");
    search->add_flag("--json", sr_json, "print the run report as JSON");

    // constants
    auto* constants = app.add_subcommand(
        "constants", "tabulate the Carleson embedding constants");
    int ct_dmax = 0;
    constants->add_option("--d-max", ct_dmax, "table rows (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic
        return kExitUsage;
    }

    try {
        if (*extremal) return cmd_extremal(ex_n, ex_out, ex_cluster, ex_json);
        if (*verify) return cmd_verify(vf_path, vf_n, vf_tol, vf_json);
        if (*factor) return cmd_factor(fc_path, fc_out, fc_tol, fc_json);
        if (*search) {
            return cmd_search(cfg, sr_mode, sr_perturbations, sr_out, sr_csv,
                              sr_json);
        }
        if (*constants) return cmd_constants(ct_dmax);
    } catch (const bernlax::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bernlax::ContractError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bernlax::UnboundedError& e) {
        std::cerr << "search failed: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
