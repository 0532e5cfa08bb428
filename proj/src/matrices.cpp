#include "torsionlab/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace torsionlab {

ComplexMatrix::ComplexMatrix(int n) : n_(n), e_(static_cast<size_t>(n * n), 0.0) {
    if (n < 1 || n > 3) throw std::invalid_argument("ComplexMatrix: dimension must be 1..3");
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1 || n > 3) throw std::invalid_argument("ComplexMatrix: dimension must be 1..3");
    if (e_.size() != static_cast<size_t>(n * n))
        throw std::invalid_argument("ComplexMatrix: wrong entry count");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    ComplexMatrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += rhs.e_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    ComplexMatrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= rhs.e_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            Complex a = at(i, k);
            if (a == Complex(0.0)) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += a * rhs.at(k, j);
        }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix r(*this);
    for (auto& x : r.e_) x *= s;
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Complex ComplexMatrix::det() const {
    switch (n_) {
        case 1:
            return e_[0];
        case 2:
            return e_[0] * e_[3] - e_[1] * e_[2];
        default:
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }
}

ComplexMatrix ComplexMatrix::inverse() const {
    Complex d = det();
    if (std::abs(d) < 1e-300) throw std::runtime_error("ComplexMatrix::inverse: singular matrix");
    ComplexMatrix r(n_);
    if (n_ == 1) {
        r.at(0, 0) = 1.0 / d;
        return r;
    }
    if (n_ == 2) {
        r.at(0, 0) = at(1, 1) / d;
        r.at(0, 1) = -at(0, 1) / d;
        r.at(1, 0) = -at(1, 0) / d;
        r.at(1, 1) = at(0, 0) / d;
        return r;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adjugate: transposed cofactor
            r.at(j, i) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) / d;
        }
    return r;
}

double ComplexMatrix::max_abs() const {
    double s = 0.0;
    for (const auto& x : e_) s = std::max(s, std::abs(x));
    return s;
}

double ComplexMatrix::relative_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    double num = 0.0;
    for (size_t i = 0; i < a.e_.size(); ++i) num = std::max(num, std::abs(a.e_[i] - b.e_[i]));
    return num / (1.0 + std::max(a.max_abs(), b.max_abs()));
}

LaurentMatrix::LaurentMatrix(int n) : n_(n), e_(static_cast<size_t>(n * n)) {
    if (n < 1 || n > 3) throw std::invalid_argument("LaurentMatrix: dimension must be 1..3");
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPolynomial::one();
    return m;
}

LaurentMatrix LaurentMatrix::from_complex(const ComplexMatrix& m, int e, double prune_tol) {
    LaurentMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            r.at(i, j) = LaurentPolynomial(e, {m.at(i, j)}, prune_tol);
    return r;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& rhs) const {
    LaurentMatrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& rhs) const {
    LaurentMatrix r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - rhs.e_[i];
    return r;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
    LaurentMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            LaurentPolynomial acc;
            for (int k = 0; k < n_; ++k) acc = acc + at(i, k) * rhs.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

LaurentPolynomial det_laurent(const LaurentMatrix& m, double prune_tol) {
    switch (m.dim()) {
        case 1:
            return m.at(0, 0);
        case 2:
            return (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).pruned(prune_tol);
        case 3: {
            LaurentPolynomial d =
                m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
            return d.pruned(prune_tol);
        }
        default:
            throw std::invalid_argument("det_laurent: dimension must be 1..3");
    }
}

} // namespace torsionlab
