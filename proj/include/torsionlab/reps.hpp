#ifndef TORSIONLAB_REPS_HPP
#define TORSIONLAB_REPS_HPP

#include "torsionlab/fox.hpp"
#include "torsionlab/knots.hpp"
#include "torsionlab/matrices.hpp"

namespace torsionlab {

/// Nonabelian SL2(C) representation of the knot group in Riley's normal
/// form, parameterized by the eigenvalue M of rho(a) and y = tr rho(ab^-1):
///   rho(a) = [[M, 1], [0, 1/M]],  rho(b) = [[M, 0], [2-y, 1/M]].
struct Sl2Rep {
    Complex M;
    Complex y;
    Complex x; // M + 1/M

    Sl2Rep(Complex M_, Complex y_);

    /// M = 1, so the meridian trace x is exactly 2.
    static Sl2Rep parabolic(Complex y) { return Sl2Rep(1.0, y); }

    bool is_parabolic(double tol = 1e-12) const;
    Complex x_squared() const { return x * x; }

    ComplexMatrix rho_a() const;
    ComplexMatrix rho_b() const;
    ComplexMatrix rho_letter(Letter l) const;
};

/// rho evaluated on a word, by multiplying generator images.
ComplexMatrix rho_word(const Sl2Rep& rep, const FreeWord& word);

/// rho(w) from the closed form in Chebyshev polynomials of y (one case per
/// parity of k); agrees with rho_word on word_w(knot).
ComplexMatrix rho_w_closed(const DoubleTwistKnot& knot, const Sl2Rep& rep);

/// tr rho(w) from the closed form:
///   2 + (y-2)(y+2-x^2) S^2_{m-1}(y)            for k = 2m,
///   2 - (y+2-x^2)(S_m(y) - S_{m-1}(y))^2       for k = 2m+1.
Complex trace_w_closed(const DoubleTwistKnot& knot, Complex x_squared, Complex y);

/// V^l = S_l(v) I - S_{l-1}(v) V^-1 for v = tr V; valid for any integer l
/// when det V = 1.
ComplexMatrix power_expand(const ComplexMatrix& V, int l);

/// The adjoint action of V = [[e,f],[g,h]] in SL2(C) on sl2(C), as the
/// explicit 3x3 matrix
///   [[e^2, -2ef, -f^2], [-eg, eh+fg, fh], [-g^2, 2gh, h^2]],
/// which lies in SL3(C).
ComplexMatrix adjoint(const ComplexMatrix& V);

/// The ring homomorphism Phi: Z[F_2] -> M_3(C[t^(+-1)]) attached to the
/// representation: a word u maps to t^(exponent sum of u) Ad(rho(u)),
/// extended linearly.
LaurentMatrix phi(const GroupRingElement& elem, const Sl2Rep& rep,
                  double prune_tol = kDefaultPruneTol);

/// Both sides of det sigma_l(Ad V) = (l+1) S_l(tr V)^2, reported for test
/// assertions.
struct SigmaDetCheck {
    Complex lhs;
    Complex rhs;
};

SigmaDetCheck sigma_det_check(const ComplexMatrix& V, int l);

} // namespace torsionlab

#endif
