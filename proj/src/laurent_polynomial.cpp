#include "torsionlab/laurent_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace torsionlab {

LaurentPolynomial::LaurentPolynomial(int lo, std::vector<Complex> coeffs, double prune_tol)
    : lo_(lo), coeffs_(std::move(coeffs)) {
    normalize(prune_tol);
}

LaurentPolynomial LaurentPolynomial::constant(Complex c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(Complex c, int e) {
    LaurentPolynomial p;
    if (c != Complex(0.0)) {
        p.lo_ = e;
        p.coeffs_.push_back(c);
    }
    return p;
}

void LaurentPolynomial::normalize(double prune_tol) {
    double scale = max_abs_coeff();
    if (scale == 0.0) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    const double floor = prune_tol * scale;
    for (auto& c : coeffs_)
        if (std::abs(c) < floor) c = 0.0;
    size_t begin = 0, end = coeffs_.size();
    while (begin < end && coeffs_[begin] == Complex(0.0)) ++begin;
    while (end > begin && coeffs_[end - 1] == Complex(0.0)) --end;
    if (begin == end) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    if (begin > 0 || end < coeffs_.size()) {
        coeffs_ = std::vector<Complex>(coeffs_.begin() + static_cast<long>(begin),
                                       coeffs_.begin() + static_cast<long>(end));
        lo_ += static_cast<int>(begin);
    }
}

Complex LaurentPolynomial::coeff(int exponent) const {
    int i = exponent - lo_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<size_t>(i)];
}

Complex LaurentPolynomial::top_coeff() const {
    if (is_zero()) throw std::logic_error("top_coeff(): zero polynomial");
    return coeffs_.back();
}

Complex LaurentPolynomial::bottom_coeff() const {
    if (is_zero()) throw std::logic_error("bottom_coeff(): zero polynomial");
    return coeffs_.front();
}

double LaurentPolynomial::max_abs_coeff() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s = std::max(s, std::abs(c));
    return s;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    int lo = std::min(lo_, rhs.lo_);
    int hi = std::max(this->hi(), rhs.hi());
    std::vector<Complex> out(static_cast<size_t>(hi - lo + 1), 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<size_t>(lo_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<size_t>(rhs.lo_ - lo) + i] += rhs.coeffs_[i];
    return LaurentPolynomial(lo, std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& rhs) const {
    return *this + (-rhs);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return LaurentPolynomial();
    std::vector<Complex> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return LaurentPolynomial(lo_ + rhs.lo_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::operator*(Complex s) const {
    if (s == Complex(0.0)) return LaurentPolynomial();
    LaurentPolynomial r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int e) const {
    LaurentPolynomial r(*this);
    if (!r.is_zero()) r.lo_ += e;
    return r;
}

Complex LaurentPolynomial::eval(Complex t) const {
    Complex acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc * std::pow(t, lo_);
}

LaurentPolynomial LaurentPolynomial::pruned(double prune_tol) const {
    return LaurentPolynomial(lo_, coeffs_, prune_tol);
}

bool LaurentPolynomial::equal_up_to_unit(const LaurentPolynomial& rhs, double tol) const {
    if (is_zero() && rhs.is_zero()) return true;
    if (is_zero() || rhs.is_zero()) return false;
    if (coeffs_.size() != rhs.coeffs_.size()) return false;
    const double scale = std::max(max_abs_coeff(), rhs.max_abs_coeff());
    for (double sign : {1.0, -1.0}) {
        bool ok = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (std::abs(coeffs_[i] - sign * rhs.coeffs_[i]) > tol * scale) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    auto fmt_num = [](double x) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", x);
        return std::string(buf);
    };
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        Complex c = coeffs_[static_cast<size_t>(i)];
        if (c == Complex(0.0)) continue;
        int e = lo_ + i;
        std::string cs;
        bool negated = false;
        if (c.imag() == 0.0) {
            double re = c.real();
            if (re < 0) {
                negated = true;
                re = -re;
            }
            cs = (re == 1.0 && e != 0) ? "" : fmt_num(re);
        } else {
            cs = "(" + fmt_num(c.real()) + (c.imag() < 0 ? "-" : "+") + fmt_num(std::abs(c.imag())) +
                 "i)";
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        os << cs;
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        } else if (cs.empty()) {
            os << "1";
        }
    }
    return os.str();
}

LaurentDivision laurent_divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den,
                                     double prune_tol) {
    if (den.is_zero()) throw std::invalid_argument("laurent_divide_exact: zero denominator");
    LaurentDivision out;
    if (num.is_zero()) return out;

    const double num_scale = num.max_abs_coeff();
    std::vector<Complex> rem = num.coeffs();
    const auto& d = den.coeffs();
    const int nq = static_cast<int>(rem.size()) - static_cast<int>(d.size()) + 1;
    if (nq <= 0) {
        // numerator lower degree than denominator: quotient zero, everything remainder
        out.residual = 1.0;
        return out;
    }
    std::vector<Complex> quot(static_cast<size_t>(nq), 0.0);
    const Complex lead = d.back();
    for (int qi = nq - 1; qi >= 0; --qi) {
        Complex q = rem[static_cast<size_t>(qi) + d.size() - 1] / lead;
        quot[static_cast<size_t>(qi)] = q;
        if (q == Complex(0.0)) continue;
        for (size_t j = 0; j < d.size(); ++j) rem[static_cast<size_t>(qi) + j] -= q * d[j];
    }
    double rmax = 0.0;
    for (size_t j = 0; j + 1 < d.size(); ++j) rmax = std::max(rmax, std::abs(rem[j]));
    out.residual = num_scale > 0 ? rmax / num_scale : 0.0;
    out.quotient = LaurentPolynomial(num.lo() - den.lo(), std::move(quot), prune_tol);
    return out;
}

} // namespace torsionlab
