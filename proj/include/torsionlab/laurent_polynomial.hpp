#ifndef TORSIONLAB_LAURENT_POLYNOMIAL_HPP
#define TORSIONLAB_LAURENT_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "torsionlab/tolerances.hpp"

namespace torsionlab {

using Complex = std::complex<double>;

/// Complex-coefficient Laurent polynomial in t. coeffs()[i] is the
/// coefficient of t^(lo()+i). The zero polynomial stores no coefficients.
/// Construction prunes coefficients below prune_tol relative to the largest
/// one and trims zero ends, so bottom/top coefficients are always
/// significant.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(int lo, std::vector<Complex> coeffs, double prune_tol = kDefaultPruneTol);

    static LaurentPolynomial zero() { return LaurentPolynomial(); }
    static LaurentPolynomial one() { return constant(1.0); }
    static LaurentPolynomial constant(Complex c);
    /// c * t^e
    static LaurentPolynomial monomial(Complex c, int e);

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    /// hi - lo; -1 for the zero polynomial
    int degree_span() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int exponent) const;
    Complex top_coeff() const;
    Complex bottom_coeff() const;
    double max_abs_coeff() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator-(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator*(Complex s) const;
    /// multiply by t^e
    LaurentPolynomial shifted(int e) const;

    Complex eval(Complex t) const;

    /// Re-trim ends against a different relative tolerance.
    LaurentPolynomial pruned(double prune_tol) const;

    /// True when the two values agree coefficientwise after aligning
    /// supports and choosing the better of the two signs (Wada's invariant
    /// is only defined up to +-t^i).
    bool equal_up_to_unit(const LaurentPolynomial& rhs, double tol = 1e-9) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize(double prune_tol);

    int lo_ = 0;
    std::vector<Complex> coeffs_;
};

inline LaurentPolynomial operator*(Complex s, const LaurentPolynomial& p) { return p * s; }

struct LaurentDivision {
    LaurentPolynomial quotient;
    /// max |remainder coefficient| / max |numerator coefficient|
    double residual = 0.0;
};

/// Long division from the top degree. Throws std::invalid_argument on a zero
/// denominator. The caller decides whether residual certifies exactness.
LaurentDivision laurent_divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den,
                                     double prune_tol = kDefaultPruneTol);

} // namespace torsionlab

#endif
