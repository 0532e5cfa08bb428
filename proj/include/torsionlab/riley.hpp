#ifndef TORSIONLAB_RILEY_HPP
#define TORSIONLAB_RILEY_HPP

#include <vector>

#include "torsionlab/chebyshev.hpp"
#include "torsionlab/int_polynomial.hpp"
#include "torsionlab/knots.hpp"
#include "torsionlab/reps.hpp"

namespace torsionlab {

/// Exact data of the Riley polynomial R(x, y) of J(k, 2n) at a fixed
/// integer value of x^2 (4 for parabolic representations), as polynomials
/// in y:
///   z = tr rho(w),  t = rho(w)_11 + (1/M - M) rho(w)_12,
///   R = t S_{n-1}(z) - S_{n-2}(z).
struct RileyData {
    DoubleTwistKnot knot;
    int x_squared;
    IntPolynomial z_poly;
    IntPolynomial t_poly;
    IntPolynomial riley;
};

RileyData build_riley(const DoubleTwistKnot& knot, int x_squared = 4);

/// Numeric evaluation of the same closed forms at arbitrary complex
/// (x^2, y) (used for oracle comparisons off the integer locus).
Complex riley_t_eval(const DoubleTwistKnot& knot, Complex x_squared, Complex y);
Complex riley_eval(const DoubleTwistKnot& knot, Complex x_squared, Complex y);

/// Closed-form R versus the matrix-entry definition
/// rho(w^n)_11 + (1/M - M) rho(w^n)_12 computed by direct word products.
struct RileyMatrixCheck {
    Complex closed;
    Complex direct;
};

RileyMatrixCheck riley_matrix_check(const DoubleTwistKnot& knot, const Sl2Rep& rep);

/// A root of the parabolic Riley polynomial R(2, y), with the flags the
/// theorem verifier needs. The s_* fields are the magnitudes of the
/// Chebyshev factors whose nonvanishing the degree argument rests on; all
/// three are reported separately.
struct ParabolicRoot {
    Complex y;
    bool nonreal = false;
    bool nondegenerate = false;
    double residual = 0.0; // relative residual of R at y
    double s_m1_y = 0.0;   // |S_{m-1}(y)|
    double s_m_y = 0.0;    // |S_m(y)|
    double s_n1_z = 0.0;   // |S_{|n|-1}(z(y))|
};

struct ParabolicRootSet {
    RileyData data;
    std::vector<ParabolicRoot> roots;
    /// R(2, y) was constant, so there are no nonabelian parabolic
    /// representations at all (happens exactly for the trivial J(1,2)).
    bool degenerate_constant = false;
};

/// All roots of R(2, y), Newton-polished, with nonreal/nondegeneracy flags.
/// Roots are ordered by descending imaginary part, then ascending real part.
ParabolicRootSet parabolic_roots(const DoubleTwistKnot& knot, const Tolerances& tol = {});

/// The hyperbolicity criterion used by classify().
bool has_nonreal_parabolic_root(const DoubleTwistKnot& knot, const Tolerances& tol = {});

} // namespace torsionlab

#endif
