#ifndef TORSIONLAB_CERTIFY_HPP
#define TORSIONLAB_CERTIFY_HPP

#include <string>

#include "torsionlab/int_polynomial.hpp"
#include "torsionlab/knots.hpp"

namespace torsionlab {

/// A prime p with p not dividing the constant coefficient of Q but dividing
/// every other coefficient. When valid, no root of Q is an algebraic
/// integer (Eisenstein-type argument). All checks are integer-exact.
struct EisensteinCertificate {
    IntPolynomial Q;
    BigInt p;
    bool valid = false;
};

/// Verifies the divisibility pattern. Throws std::invalid_argument for a
/// constant Q or a non-prime p.
EisensteinCertificate eisenstein_check(const IntPolynomial& Q, const BigInt& p);

/// Builds Q = q P + r for coprime q, r with |q| >= 2 and certifies it with
/// the smallest prime factor of q. The construction guarantees validity;
/// preconditions are checked and violations throw std::invalid_argument.
EisensteinCertificate corollary_certificate(const BigInt& q, const BigInt& r,
                                            const IntPolynomial& P);

/// Exact non-monicity proof for a non-fibered double twist knot: every
/// parabolic Riley root y is an algebraic integer (the parabolic Riley
/// polynomial is monic over Z), while the Eisenstein certificates show that
/// q P(y) +- 1 has no algebraic-integer root, so the extreme coefficient
/// q P(y) of Delta can never equal +-1. No floating point anywhere.
struct MonicityObstruction {
    DoubleTwistKnot knot;
    BigInt q;        // m|n| (k even), m (k odd, n >= 1) or m+1 (k odd, n <= -1)
    IntPolynomial P; // the Chebyshev-square polynomial in y
    EisensteinCertificate cert_plus;  // r = +1
    EisensteinCertificate cert_minus; // r = -1
    bool riley_monic = false;
    bool valid = false; // both certificates valid and riley_monic
};

/// True for the non-fibered cases where the obstruction argument applies.
bool obstruction_applicable(const DoubleTwistKnot& knot);

/// Throws std::invalid_argument for knots in a fibered case.
MonicityObstruction monicity_obstruction(const DoubleTwistKnot& knot);

/// JSON with fields knot, q, riley_monic, valid and per-certificate
/// r, p, Q (coefficients as decimal strings, constant term first), valid.
std::string obstruction_to_json(const MonicityObstruction& ob);

/// Desk-scale falsifiable oracle: enumerates monic integer polynomials of
/// degree <= degree_bound with |coefficients| <= height_bound and returns
/// true iff none of their roots lies within 1e-8 of a root of Q.
bool brute_force_algint_check(const IntPolynomial& Q, int degree_bound, int height_bound);

} // namespace torsionlab

#endif
