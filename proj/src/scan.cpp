#include "torsionlab/scan.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "torsionlab/certify.hpp"

namespace torsionlab {

void ScanConfig::validate() const {
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("scan: invalid k range");
    if (n_max < n_min) throw std::invalid_argument("scan: invalid n range");
    if (n_min == 0 && n_max == 0) throw std::invalid_argument("scan: n range contains only 0");
    if (jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");
    if (tol.root_tol <= 0 || tol.prune_tol <= 0 || tol.monic_tol <= 0)
        throw std::invalid_argument("scan: tolerances must be positive");
}

namespace {

std::vector<ScanRow> scan_knot(const DoubleTwistKnot& knot, const Tolerances& tol) {
    std::vector<ScanRow> rows;
    ScanRow base;
    base.k = knot.k;
    base.n = knot.n;

    KnotFacts facts;
    try {
        facts = classify(knot, tol);
    } catch (const std::invalid_argument&) {
        base.status = "skipped:trivial";
        rows.push_back(base);
        return rows;
    }
    base.genus = facts.genus;
    base.fibered = facts.fibered;

    if (!facts.hyperbolic) {
        base.status = "skipped:non-hyperbolic";
        rows.push_back(base);
        return rows;
    }

    std::string certificate = "n/a(fibered)";
    if (!facts.fibered) {
        try {
            certificate = monicity_obstruction(knot).valid ? "valid" : "invalid";
        } catch (const std::exception&) {
            certificate = "invalid";
        }
    }

    try {
        for (const TorsionReport& report : verify_theorem(knot, tol)) {
            ScanRow row = base;
            row.status = report.verdicts_withheld ? "withheld" : "verified";
            row.has_root = true;
            row.y = report.root.y;
            row.root_residual = report.root.residual;
            row.division_residual = report.division_residual;
            row.certificate = certificate;
            row.t0_end_matched = report.t0_end_matched;
            if (!report.delta_failed) {
                row.degree_span = report.degree_span;
                row.expected_span = report.predicted.span;
                row.top_coeff = report.top_coeff;
                row.bottom_coeff = report.bottom_coeff;
                row.monic = report.monic;
            }
            row.verdict_ok = report.ok() &&
                             (report.verdicts_withheld ||
                              (report.extremes_match && certificate != "invalid"));
            rows.push_back(std::move(row));
        }
    } catch (const std::exception& e) {
        ScanRow row = base;
        row.status = std::string("error:") + e.what();
        row.verdict_ok = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

ScanResult run_scan(const ScanConfig& config) {
    config.validate();

    std::vector<DoubleTwistKnot> tasks;
    for (int k = config.k_min; k <= config.k_max; ++k)
        for (int n = config.n_min; n <= config.n_max; ++n)
            if (n != 0) tasks.emplace_back(k, n);

    std::vector<std::vector<ScanRow>> per_task(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            per_task[i] = scan_knot(tasks[i], config.tol);
        }
    };
    const int jobs = std::min<int>(config.jobs, static_cast<int>(tasks.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ScanResult out;
    for (auto& rows : per_task)
        for (auto& row : rows) {
            out.summary.rows++;
            if (row.status == "verified") {
                out.summary.verified++;
                if (!row.verdict_ok) out.summary.mismatches++;
            } else if (row.status == "withheld") {
                out.summary.withheld++;
            } else if (row.status.rfind("skipped", 0) == 0) {
                out.summary.skipped++;
            } else {
                out.summary.errors++;
            }
            out.rows.push_back(std::move(row));
        }
    return out;
}

std::string format_complex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.12g%s%.12gi", z.real(), z.imag() < 0 ? "-" : "+",
                  std::abs(z.imag()));
    return buf;
}

namespace {

std::string tolerance_echo(const Tolerances& tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "root_tol=%g prune_tol=%g monic_tol=%g residual_tol=%g",
                  tol.root_tol, tol.prune_tol, tol.monic_tol, tol.residual_tol);
    return buf;
}

} // namespace

void write_scan_csv(std::ostream& os, const ScanConfig& config, const ScanResult& result) {
    os << "# torsionlab scan k=[" << config.k_min << "," << config.k_max << "] n=[" << config.n_min
       << "," << config.n_max << "] " << tolerance_echo(config.tol) << "\n";
    os << "k,n,genus,fibered,status,y,degree_span,expected_span,top_coeff,bottom_coeff,monic,"
          "verdict,certificate,root_residual,division_residual,t0_end_match\n";
    char buf[64];
    for (const ScanRow& r : result.rows) {
        os << r.k << "," << r.n << "," << r.genus << "," << (r.fibered ? "true" : "false") << ","
           << r.status << ",";
        if (r.has_root) {
            os << format_complex(r.y) << "," << r.degree_span << "," << r.expected_span << ","
               << format_complex(r.top_coeff) << "," << format_complex(r.bottom_coeff) << ","
               << (r.monic ? "true" : "false") << "," << (r.verdict_ok ? "pass" : "fail") << ","
               << r.certificate << ",";
            std::snprintf(buf, sizeof(buf), "%.3g,%.3g", r.root_residual, r.division_residual);
            os << buf << "," << r.t0_end_matched << "\n";
        } else {
            os << ",,,,,," << (r.verdict_ok ? "pass" : "fail") << "," << r.certificate << ",,,"
               << r.t0_end_matched << "\n";
        }
    }
    os << "# summary: rows=" << result.summary.rows << " verified=" << result.summary.verified
       << " mismatches=" << result.summary.mismatches << " withheld=" << result.summary.withheld
       << " skipped=" << result.summary.skipped << " errors=" << result.summary.errors << "\n";
}

void write_scan_json(std::ostream& os, const ScanConfig& config, const ScanResult& result) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["k_range"] = {config.k_min, config.k_max};
    j["n_range"] = {config.n_min, config.n_max};
    j["tolerances"] = {{"root_tol", config.tol.root_tol},
                       {"prune_tol", config.tol.prune_tol},
                       {"monic_tol", config.tol.monic_tol},
                       {"residual_tol", config.tol.residual_tol}};
    auto cplx = [](Complex z) { return nlohmann::json{{"re", z.real()}, {"im", z.imag()}}; };
    nlohmann::json rows = nlohmann::json::array();
    for (const ScanRow& r : result.rows) {
        nlohmann::json row;
        row["k"] = r.k;
        row["n"] = r.n;
        row["genus"] = r.genus;
        row["fibered"] = r.fibered;
        row["status"] = r.status;
        row["verdict"] = r.verdict_ok ? "pass" : "fail";
        row["certificate"] = r.certificate;
        if (r.has_root) {
            row["y"] = cplx(r.y);
            row["degree_span"] = r.degree_span;
            row["expected_span"] = r.expected_span;
            row["top_coeff"] = cplx(r.top_coeff);
            row["bottom_coeff"] = cplx(r.bottom_coeff);
            row["monic"] = r.monic;
            row["root_residual"] = r.root_residual;
            row["division_residual"] = r.division_residual;
            row["t0_end_match"] = r.t0_end_matched;
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["summary"] = {{"rows", result.summary.rows},         {"verified", result.summary.verified},
                    {"mismatches", result.summary.mismatches}, {"withheld", result.summary.withheld},
                    {"skipped", result.summary.skipped},    {"errors", result.summary.errors}};
    os << j.dump(2) << "\n";
}

} // namespace torsionlab
