#ifndef TORSIONLAB_MATRICES_HPP
#define TORSIONLAB_MATRICES_HPP

#include <vector>

#include "torsionlab/laurent_polynomial.hpp"

namespace torsionlab {

/// Dense n x n complex matrix, n in {2, 3}. Row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int n);
    ComplexMatrix(int n, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);

    int dim() const { return n_; }
    Complex& at(int i, int j) { return e_[static_cast<size_t>(i * n_ + j)]; }
    Complex at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex s) const;

    Complex trace() const;
    Complex det() const;
    /// Cofactor inverse; throws for (numerically) singular input.
    ComplexMatrix inverse() const;

    double max_abs() const;
    /// max entrywise |a-b| / (1 + max entry magnitude of either)
    static double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int n_;
    std::vector<Complex> e_;
};

inline ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

/// n x n matrix of Laurent polynomials (n <= 3 is all this project needs).
class LaurentMatrix {
public:
    explicit LaurentMatrix(int n);

    static LaurentMatrix identity(int n);
    /// M * t^e entrywise
    static LaurentMatrix from_complex(const ComplexMatrix& m, int e = 0,
                                      double prune_tol = kDefaultPruneTol);

    int dim() const { return n_; }
    LaurentPolynomial& at(int i, int j) { return e_[static_cast<size_t>(i * n_ + j)]; }
    const LaurentPolynomial& at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

    LaurentMatrix operator+(const LaurentMatrix& rhs) const;
    LaurentMatrix operator-(const LaurentMatrix& rhs) const;
    LaurentMatrix operator*(const LaurentMatrix& rhs) const;

private:
    int n_;
    std::vector<LaurentPolynomial> e_;
};

/// Cofactor-expansion determinant, exact exponent tracking; n <= 3.
LaurentPolynomial det_laurent(const LaurentMatrix& m, double prune_tol = kDefaultPruneTol);

} // namespace torsionlab

#endif
