#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torsionlab/certify.hpp"
#include "torsionlab/roots.hpp"
#include "torsionlab/scan.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

// exit codes: 0 = verified, 1 = verdict mismatch, 2 = invalid or
// non-hyperbolic input, 3 = numeric failure
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

void parse_range(const std::string& text, int& lo, int& hi) {
    const size_t pos = text.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must have the form a..b, got: " + text);
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
}

std::string tolerance_line(const Tolerances& tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "root_tol=%g prune_tol=%g monic_tol=%g residual_tol=%g",
                  tol.root_tol, tol.prune_tol, tol.monic_tol, tol.residual_tol);
    return buf;
}

int cmd_riley(const std::string& name, const Tolerances& tol) {
    const DoubleTwistKnot knot = parse_knot_name(name);
    const ParabolicRootSet set = parabolic_roots(knot, tol);
    std::cout << knot.name() << " parabolic Riley data (x^2 = 4)\n";
    std::cout << "tolerances: " << tolerance_line(tol) << "\n";
    std::cout << "  z(y) = " << set.data.z_poly.to_string() << "\n";
    std::cout << "  t(y) = " << set.data.t_poly.to_string() << "\n";
    std::cout << "  R(2,y) = " << set.data.riley.to_string() << "\n";
    if (set.degenerate_constant) {
        std::cout << "  R is constant: no nonabelian parabolic representations (trivial knot)\n";
        return kExitOk;
    }
    bool any_nonreal = false;
    for (const ParabolicRoot& r : set.roots) {
        any_nonreal = any_nonreal || r.nonreal;
        std::printf("  root y = %s  %s %s  |R(y)| rel %.2e  [|S_(m-1)(y)|=%.3g |S_m(y)|=%.3g "
                    "|S_(|n|-1)(z)|=%.3g]\n",
                    format_complex(r.y).c_str(), r.nonreal ? "nonreal" : "real",
                    r.nondegenerate ? "nondegenerate" : "degenerate", r.residual, r.s_m1_y, r.s_m_y,
                    r.s_n1_z);
    }
    if (!any_nonreal)
        std::cout << "  warning: all roots real, " << knot.name() << " is not hyperbolic\n";
    return kExitOk;
}

int cmd_verify(const std::string& name, const Tolerances& tol, bool as_json) {
    const DoubleTwistKnot knot = parse_knot_name(name);
    const KnotFacts facts = classify(knot, tol);
    const std::vector<TorsionReport> reports = verify_theorem(knot, tol);

    bool obstruction_ok = true;
    std::string obstruction_note = "n/a (fibered case)";
    if (obstruction_applicable(knot)) {
        const MonicityObstruction ob = monicity_obstruction(knot);
        obstruction_ok = ob.valid;
        obstruction_note = std::string("q=") + ob.q.str() + ", P = " + ob.P.to_string() +
                           ", certificates r=+1/-1 " + (ob.valid ? "valid" : "INVALID") +
                           " (p=" + ob.cert_plus.p.str() + "), Riley monic: " +
                           (ob.riley_monic ? "yes" : "NO");
    }

    int verified = 0, withheld = 0;
    bool all_ok = obstruction_ok;
    for (const TorsionReport& r : reports) {
        const bool row_ok = r.ok() && (r.verdicts_withheld || r.extremes_match);
        all_ok = all_ok && row_ok;
        r.verdicts_withheld ? ++withheld : ++verified;
    }

    if (as_json) {
        std::cout << "{\n  \"schema_version\": 1,\n  \"knot\": \"" << knot.name() << "\",\n";
        std::cout << "  \"genus\": " << facts.genus << ",\n  \"fibered\": "
                  << (facts.fibered ? "true" : "false") << ",\n  \"reports\": [\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const TorsionReport& r = reports[i];
            std::printf("    {\"y\": \"%s\", \"status\": \"%s\", \"degree_span\": %d, "
                        "\"expected_span\": %d, \"top\": \"%s\", \"bottom\": \"%s\", "
                        "\"monic\": %s, \"ok\": %s}%s\n",
                        format_complex(r.root.y).c_str(),
                        r.verdicts_withheld ? "withheld" : "verified", r.degree_span,
                        r.predicted.span, format_complex(r.top_coeff).c_str(),
                        format_complex(r.bottom_coeff).c_str(), r.monic ? "true" : "false",
                        r.ok() && (r.verdicts_withheld || r.extremes_match) ? "true" : "false",
                        i + 1 < reports.size() ? "," : "");
        }
        std::cout << "  ],\n  \"all_ok\": " << (all_ok ? "true" : "false") << "\n}\n";
    } else {
        std::cout << knot.name() << ": genus " << facts.genus << ", "
                  << (facts.fibered ? "fibered" : "not fibered") << ", hyperbolic\n";
        std::cout << "tolerances: " << tolerance_line(tol) << "\n";
        for (const TorsionReport& r : reports) {
            if (r.verdicts_withheld) {
                std::printf("  y = %s  [%s%s root: reported, verdicts withheld]\n",
                            format_complex(r.root.y).c_str(), r.root.nonreal ? "" : "real",
                            r.root.nondegenerate ? "" : " degenerate");
                continue;
            }
            std::printf("  y = %s  span %d (want %d)  ends %s / %s  monic=%s  div_res %.2e  %s\n",
                        format_complex(r.root.y).c_str(), r.degree_span, 3 * (2 * r.genus - 1),
                        format_complex(r.top_coeff).c_str(),
                        format_complex(r.bottom_coeff).c_str(), r.monic ? "yes" : "no",
                        r.division_residual,
                        r.ok() && r.extremes_match ? "PASS" : "FAIL");
            if (r.t0_end_matched != "n/a")
                std::cout << "      t^0-end coefficient matches candidate: " << r.t0_end_matched
                          << "\n";
        }
        std::cout << "obstruction: " << obstruction_note << "\n";
        std::cout << "verdict: " << (all_ok ? "PASS" : "FAIL") << " (" << verified
                  << " roots verified, " << withheld << " withheld)\n";
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_certify(const std::string& name) {
    const DoubleTwistKnot knot = parse_knot_name(name);
    const MonicityObstruction ob = monicity_obstruction(knot);
    std::cout << obstruction_to_json(ob) << "\n";
    return ob.valid ? kExitOk : kExitMismatch;
}

int cmd_scan(const ScanConfig& config) {
    const ScanResult result = run_scan(config);
    if (config.format == ScanFormat::csv)
        write_scan_csv(std::cout, config, result);
    else
        write_scan_json(std::cout, config, result);
    if (result.summary.errors > 0) return kExitNumeric;
    return result.summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsionlab: adjoint twisted Alexander polynomials of double twist knots J(k,2n) "
                 "at parabolic SL2(C) representations"};
    app.require_subcommand(1);

    Tolerances tol;
    std::string knot_name;
    bool verify_json = false;

    CLI::App* riley = app.add_subcommand("riley", "print the parabolic Riley polynomial and roots");
    riley->add_option("knot", knot_name, "knot name J(k,2n), e.g. \"J(2,-2)\"")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "check degree = 3(2g-1) and monic <=> fibered at every verified root");
    verify->add_option("knot", knot_name, "knot name J(k,2n)")->required();
    verify->add_flag("--json", verify_json, "machine-readable output");

    CLI::App* certify =
        app.add_subcommand("certify", "emit the exact non-monicity certificate as JSON");
    certify->add_option("knot", knot_name, "knot name J(k,2n)")->required();

    ScanConfig config;
    std::string k_range = "2..8", n_range = "-4..4", format = "csv";
    CLI::App* scan = app.add_subcommand("scan", "verify the theorem over a (k, n) grid");
    scan->add_option("--k", k_range, "inclusive k range a..b (default 2..8)");
    scan->add_option("--n", n_range, "inclusive n range a..b, n=0 skipped (default -4..4)");
    scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--jobs", config.jobs, "worker count (default 1)");

    for (CLI::App* sub : {riley, verify, certify, scan}) {
        sub->add_option("--root-tol", tol.root_tol, "polynomial root residual tolerance");
        sub->add_option("--prune-tol", tol.prune_tol, "Laurent coefficient pruning tolerance");
        sub->add_option("--monic-tol", tol.monic_tol, "distance from +-1 counted as monic");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (riley->parsed()) return cmd_riley(knot_name, tol);
        if (verify->parsed()) return cmd_verify(knot_name, tol, verify_json);
        if (certify->parsed()) return cmd_certify(knot_name);
        parse_range(k_range, config.k_min, config.k_max);
        parse_range(n_range, config.n_min, config.n_max);
        config.tol = tol;
        config.format = format == "json" ? ScanFormat::json : ScanFormat::csv;
        return cmd_scan(config);
    } catch (const NonHyperbolicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const TorsionError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const RootFindingError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
