#ifndef TORSIONLAB_ROOTS_HPP
#define TORSIONLAB_ROOTS_HPP

#include <stdexcept>
#include <vector>

#include "torsionlab/int_polynomial.hpp"
#include "torsionlab/laurent_polynomial.hpp"

namespace torsionlab {

/// Raised when the simultaneous iteration fails to meet the residual bound;
/// carries the best iterate found.
class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& msg, std::vector<Complex> best)
        : std::runtime_error(msg), best_iterate(std::move(best)) {}
    std::vector<Complex> best_iterate;
};

/// All complex roots (with multiplicity) of the polynomial with the given
/// coefficients (index = power). Aberth-Ehrlich simultaneous iteration with
/// a Newton polish; every returned root satisfies
///   |p(root)| <= root_tol * sum_i |c_i| |root|^i.
/// Real-coefficient input gets its nonreal roots symmetrized into exact
/// conjugate pairs. Throws std::invalid_argument for degree < 1 and
/// RootFindingError on non-convergence.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, double root_tol = 1e-10);

std::vector<Complex> poly_roots(const IntPolynomial& p, double root_tol = 1e-10);

/// |p(z)| / sum_i |c_i| |z|^i  (0/0 treated as 0).
double relative_root_residual(const std::vector<Complex>& coeffs, Complex z);
double relative_root_residual(const IntPolynomial& p, Complex z);

} // namespace torsionlab

#endif
