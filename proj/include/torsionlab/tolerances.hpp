#ifndef TORSIONLAB_TOLERANCES_HPP
#define TORSIONLAB_TOLERANCES_HPP

namespace torsionlab {

// Numeric knobs for the double-precision pipeline. The exact (integer)
// pipeline never consults these.
struct Tolerances {
    double root_tol = 1e-10;       // relative residual accepted for a polynomial root
    double prune_tol = 1e-10;      // relative magnitude below which Laurent ends are trimmed
    double monic_tol = 1e-6;       // |extreme coefficient| distance from +-1
    double residual_tol = 1e-8;    // Laurent division remainder accepted as "exact"
    double nondegen_margin = 1e-8; // lower bound certifying a Chebyshev factor is nonzero
    double imag_tol = 1e-8;        // |Im y| above which a root counts as nonreal
};

inline constexpr double kDefaultPruneTol = 1e-10;

} // namespace torsionlab

#endif
