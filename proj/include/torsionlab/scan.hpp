#ifndef TORSIONLAB_SCAN_HPP
#define TORSIONLAB_SCAN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "torsionlab/torsion.hpp"

namespace torsionlab {

enum class ScanFormat { csv, json };

struct ScanConfig {
    int k_min = 2;
    int k_max = 8;
    int n_min = -4;
    int n_max = 4; // n = 0 is skipped automatically
    Tolerances tol;
    ScanFormat format = ScanFormat::csv;
    int jobs = 1;

    void validate() const; // throws std::invalid_argument
};

/// One row per (knot, parabolic root); skipped knots get a single row.
struct ScanRow {
    int k = 0;
    int n = 0;
    int genus = 0;
    bool fibered = false;
    /// "verified" | "withheld" | "skipped:trivial" | "skipped:non-hyperbolic"
    /// | "error:<reason>"
    std::string status;
    bool has_root = false;
    Complex y;
    int degree_span = 0;
    int expected_span = 0;
    Complex top_coeff;
    Complex bottom_coeff;
    bool monic = false;
    /// degree law + monic/fibered agreement + extreme-coefficient match
    /// (vacuously true off verified rows)
    bool verdict_ok = true;
    std::string certificate; // "valid" | "invalid" | "n/a(fibered)" | ""
    double root_residual = 0.0;
    double division_residual = 0.0;
    std::string t0_end_matched = "n/a";
};

struct ScanSummary {
    int rows = 0;
    int verified = 0;
    int mismatches = 0;
    int withheld = 0;
    int skipped = 0;
    int errors = 0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanSummary summary;
};

/// Runs the grid with config.jobs workers. Row order is (k asc, n asc,
/// Im y desc) regardless of worker count; per-knot failures become
/// error rows rather than aborting the scan.
ScanResult run_scan(const ScanConfig& config);

void write_scan_csv(std::ostream& os, const ScanConfig& config, const ScanResult& result);
void write_scan_json(std::ostream& os, const ScanConfig& config, const ScanResult& result);

/// "re+imi" with 12 significant digits, e.g. "1.5+0.866025403785i".
std::string format_complex(Complex z);

} // namespace torsionlab

#endif
