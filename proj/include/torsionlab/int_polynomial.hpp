#ifndef TORSIONLAB_INT_POLYNOMIAL_HPP
#define TORSIONLAB_INT_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torsionlab {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; coeffs[i] is the coefficient of the i-th power.
/// Trailing zeros are always trimmed, so the highest stored coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
class IntPolynomial {
public:
    // degree() of the zero polynomial
    static constexpr int kZeroDegree = -1;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(BigInt c);
    /// c * x^k
    static IntPolynomial monomial(BigInt c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    /// kZeroDegree for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i (zero outside the stored range).
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;
    const BigInt& constant_term() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const BigInt& s) const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

    /// this(inner(x)), exact.
    IntPolynomial compose(const IntPolynomial& inner) const;
    IntPolynomial squared() const { return (*this) * (*this); }

    BigInt eval(const BigInt& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    /// Largest |coefficient| converted to double (0 for the zero polynomial).
    double coeff_scale() const;

    std::string to_string(const std::string& var = "y") const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

inline IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) { return p * s; }

} // namespace torsionlab

#endif
