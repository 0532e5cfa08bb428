#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "test_util.hpp"
#include "torsionlab/scan.hpp"

using namespace torsionlab;

namespace {

std::string scan_csv_string(const ScanConfig& config) {
    const ScanResult result = run_scan(config);
    std::ostringstream os;
    write_scan_csv(os, config, result);
    return os.str();
}

} // namespace

TEST_SUITE("scan") {

TEST_CASE("complex formatting") {
    CHECK(format_complex(Complex(1.5, 0.5)) == "1.5+0.5i");
    CHECK(format_complex(Complex(-2.0, -0.25)) == "-2-0.25i");
    CHECK(format_complex(Complex(3.0, 0.0)) == "3+0i");
    CHECK(format_complex(Complex(1.0 / 3.0, 0.0)) == "0.333333333333+0i");
}

TEST_CASE("config validation") {
    ScanConfig bad;
    bad.k_min = 3;
    bad.k_max = 2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    ScanConfig only_zero;
    only_zero.n_min = 0;
    only_zero.n_max = 0;
    CHECK_THROWS_AS(only_zero.validate(), std::invalid_argument);

    ScanConfig neg_jobs;
    neg_jobs.jobs = 0;
    CHECK_THROWS_AS(neg_jobs.validate(), std::invalid_argument);

    ScanConfig bad_tol;
    bad_tol.tol.root_tol = -1.0;
    CHECK_THROWS_AS(bad_tol.validate(), std::invalid_argument);
}

TEST_CASE("small grid verifies with zero mismatches") {
    ScanConfig config;
    config.k_min = 2;
    config.k_max = 4;
    config.n_min = -2;
    config.n_max = 2;
    const ScanResult result = run_scan(config);
    CHECK(result.summary.mismatches == 0);
    CHECK(result.summary.errors == 0);
    CHECK(result.summary.verified > 0);

    // rows ordered by k, then n; roots by descending imaginary part
    for (size_t i = 1; i < result.rows.size(); ++i) {
        const ScanRow& prev = result.rows[i - 1];
        const ScanRow& cur = result.rows[i];
        const bool ordered = prev.k < cur.k || (prev.k == cur.k && prev.n < cur.n) ||
                             (prev.k == cur.k && prev.n == cur.n &&
                              prev.y.imag() >= cur.y.imag());
        CHECK(ordered);
    }
}

TEST_CASE("k=1 and trefoil rows are skipped, not errors") {
    ScanConfig config;
    config.k_min = 1;
    config.k_max = 2;
    config.n_min = 1;
    config.n_max = 2;
    const ScanResult result = run_scan(config);
    REQUIRE(result.rows.size() >= 4);
    CHECK(result.rows[0].status == "skipped:trivial");        // J(1,2)
    CHECK(result.rows[1].status == "skipped:non-hyperbolic"); // J(1,4)
    CHECK(result.rows[2].status == "skipped:non-hyperbolic"); // J(2,2)
    CHECK(result.summary.errors == 0);
    CHECK(result.summary.mismatches == 0);
}

TEST_CASE("worker count does not change the output") {
    ScanConfig c1;
    c1.k_min = 2;
    c1.k_max = 5;
    c1.n_min = -2;
    c1.n_max = 2;
    ScanConfig c4 = c1;
    c1.jobs = 1;
    c4.jobs = 4;
    CHECK(scan_csv_string(c1) == scan_csv_string(c4));
}

TEST_CASE("CSV shape: header, rows, summary, tolerance echo") {
    ScanConfig config;
    config.k_min = 2;
    config.k_max = 2;
    config.n_min = -1;
    config.n_max = 1;
    const std::string csv = scan_csv_string(config);
    CHECK(csv.find("# torsionlab scan") != std::string::npos);
    CHECK(csv.find("root_tol=") != std::string::npos);
    CHECK(csv.find("k,n,genus,fibered,status,y,degree_span,expected_span,top_coeff,bottom_coeff,"
                   "monic,verdict,certificate,root_residual,division_residual,t0_end_match") !=
          std::string::npos);
    CHECK(csv.find("# summary: rows=") != std::string::npos);
    CHECK(csv.find("mismatches=0") != std::string::npos);
}

TEST_CASE("JSON output is schema-versioned and parseable") {
    ScanConfig config;
    config.k_min = 2;
    config.k_max = 3;
    config.n_min = -2;
    config.n_max = 2;
    config.format = ScanFormat::json;
    const ScanResult result = run_scan(config);
    std::ostringstream os;
    write_scan_json(os, config, result);
    const nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j["schema_version"] == 1);
    CHECK(j["summary"]["mismatches"] == 0);
    CHECK(j["rows"].size() == result.rows.size());
    CHECK(j["tolerances"]["root_tol"].get<double>() == doctest::Approx(1e-10));
}

} // TEST_SUITE
