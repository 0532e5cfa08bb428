#include "torsionlab/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace torsionlab {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, int k) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, kZero);
        p.coeffs_[static_cast<size_t>(k)] = std::move(c);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading(): zero polynomial");
    return coeffs_.back();
}

const BigInt& IntPolynomial::constant_term() const {
    return coeff(0);
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
    if (s == 0) return IntPolynomial();
    IntPolynomial r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    // Horner on the outer polynomial
    IntPolynomial acc;
    for (int i = degree(); i >= 0; --i) {
        acc = acc * inner + IntPolynomial::constant(coeffs_[static_cast<size_t>(i)]);
    }
    return acc;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<size_t>(i)];
    return acc;
}

std::complex<double> IntPolynomial::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + static_cast<double>(coeffs_[static_cast<size_t>(i)]);
    return acc;
}

double IntPolynomial::coeff_scale() const {
    double s = 0.0;
    for (const auto& c : coeffs_) {
        double a = std::abs(static_cast<double>(c));
        if (a > s) s = a;
    }
    return s;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace torsionlab
