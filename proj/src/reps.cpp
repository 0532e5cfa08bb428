#include "torsionlab/reps.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "closed_eval.hpp"
#include "torsionlab/chebyshev.hpp"

namespace torsionlab {

Sl2Rep::Sl2Rep(Complex M_, Complex y_) : M(M_), y(y_), x(M_ + 1.0 / M_) {
    if (M == Complex(0.0)) throw std::invalid_argument("Sl2Rep: M must be nonzero");
}

bool Sl2Rep::is_parabolic(double tol) const {
    return std::abs(x - 2.0) < tol || std::abs(x + 2.0) < tol;
}

ComplexMatrix Sl2Rep::rho_a() const { return ComplexMatrix(2, {M, 1.0, 0.0, 1.0 / M}); }

ComplexMatrix Sl2Rep::rho_b() const { return ComplexMatrix(2, {M, 0.0, 2.0 - y, 1.0 / M}); }

ComplexMatrix Sl2Rep::rho_letter(Letter l) const {
    ComplexMatrix g = l.gen == Gen::a ? rho_a() : rho_b();
    if (l.exp < 0) {
        // SL2 inverse: [[h, -f], [-g, e]]
        return ComplexMatrix(2, {g.at(1, 1), -g.at(0, 1), -g.at(1, 0), g.at(0, 0)});
    }
    return g;
}

ComplexMatrix rho_word(const Sl2Rep& rep, const FreeWord& word) {
    ComplexMatrix out = ComplexMatrix::identity(2);
    for (Letter l : word.letters()) out = out * rep.rho_letter(l);
    return out;
}

ComplexMatrix rho_w_closed(const DoubleTwistKnot& knot, const Sl2Rep& rep) {
    const Complex y = rep.y;
    const Complex M = rep.M;
    const Complex Mi = 1.0 / M;
    const int m = knot.m;
    const Complex sm = cheb_eval(m, y);
    const Complex sm1 = cheb_eval(m - 1, y);
    ComplexMatrix out = ComplexMatrix::identity(2);
    if (!knot.odd()) {
        ComplexMatrix c1(2, {y - 2.0, M - Mi, (M - Mi) * (2.0 - y), 2.0 - y});
        ComplexMatrix c2(2, {(y - 2.0) * (y - M * M), -(Mi * y - M - Mi),
                             (y - 2.0) * (Mi * y - M - Mi), Mi * Mi * (2.0 - y)});
        return out - sm * sm1 * c1 + (sm1 * sm1) * c2;
    }
    ComplexMatrix d1(2, {2.0 * M * M - y, M + Mi, (M + Mi) * (2.0 - y), 2.0 * Mi * Mi - y});
    ComplexMatrix d2(2, {M * M - 1.0, M, M * (2.0 - y), -y + 1.0 + Mi * Mi});
    ComplexMatrix d3(2, {-y + 1.0 + M * M, Mi, Mi * (2.0 - y), Mi * Mi - 1.0});
    return out - sm * sm1 * d1 + (sm * sm) * d2 + (sm1 * sm1) * d3;
}

Complex trace_w_closed(const DoubleTwistKnot& knot, Complex x_squared, Complex y) {
    const Complex sm = cheb_eval(knot.m, y);
    const Complex sm1 = cheb_eval(knot.m - 1, y);
    if (!knot.odd()) return 2.0 + (y - 2.0) * (y + 2.0 - x_squared) * sm1 * sm1;
    const Complex d = sm - sm1;
    return 2.0 - (y + 2.0 - x_squared) * d * d;
}

ComplexMatrix power_expand(const ComplexMatrix& V, int l) {
    const Complex v = V.trace();
    return cheb_eval(l, v) * ComplexMatrix::identity(2) - cheb_eval(l - 1, v) * V.inverse();
}

ComplexMatrix adjoint(const ComplexMatrix& V) {
    if (V.dim() != 2) throw std::invalid_argument("adjoint: expected a 2x2 matrix");
    const Complex e = V.at(0, 0), f = V.at(0, 1), g = V.at(1, 0), h = V.at(1, 1);
    return ComplexMatrix(3, {e * e, -2.0 * e * f, -f * f,      //
                             -e * g, e * h + f * g, f * h,     //
                             -g * g, 2.0 * g * h, h * h});
}

LaurentMatrix phi(const GroupRingElement& elem, const Sl2Rep& rep, double prune_tol) {
    // accumulate 3x3 blocks by t-exponent, then assemble entrywise
    std::map<int, ComplexMatrix> blocks;
    for (const auto& [word, coeff] : elem.terms()) {
        ComplexMatrix ad = adjoint(rho_word(rep, word)) * Complex(static_cast<double>(coeff));
        auto [it, inserted] = blocks.try_emplace(word.exponent_sum(), ad);
        if (!inserted) it->second = it->second + ad;
    }
    LaurentMatrix out(3);
    if (blocks.empty()) return out;
    const int lo = blocks.begin()->first;
    const int hi = blocks.rbegin()->first;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<Complex> c(static_cast<size_t>(hi - lo + 1), 0.0);
            for (const auto& [e, m] : blocks) c[static_cast<size_t>(e - lo)] = m.at(i, j);
            out.at(i, j) = LaurentPolynomial(lo, std::move(c), prune_tol);
        }
    return out;
}

SigmaDetCheck sigma_det_check(const ComplexMatrix& V, int l) {
    if (l < 0) throw std::invalid_argument("sigma_det_check: l must be >= 0");
    // the determinant cancels by a factor ~ |eigenvalue|^(4l); extended
    // precision keeps the report meaningful across the sampled range
    using LC = std::complex<long double>;
    std::array<LC, 4> v2;
    for (int i = 0; i < 4; ++i)
        v2[static_cast<size_t>(i)] = LC(V.at(i / 2, i % 2).real(), V.at(i / 2, i % 2).imag());
    const LC e = v2[0], f = v2[1], g = v2[2], h = v2[3];
    std::array<LC, 9> ad{e * e, -2.0L * e * f, -f * f,  //
                         -e * g, e * h + f * g, f * h,  //
                         -g * g, 2.0L * g * h, h * h};
    std::array<LC, 9> sum{1, 0, 0, 0, 1, 0, 0, 0, 1};
    std::array<LC, 9> p = sum;
    for (int i = 1; i <= l; ++i) {
        std::array<LC, 9> next{};
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 3; ++k)
                for (int c = 0; c < 3; ++c)
                    next[static_cast<size_t>(3 * r + c)] +=
                        p[static_cast<size_t>(3 * r + k)] * ad[static_cast<size_t>(3 * k + c)];
        p = next;
        for (int j = 0; j < 9; ++j) sum[static_cast<size_t>(j)] += p[static_cast<size_t>(j)];
    }
    const LC det = sum[0] * (sum[4] * sum[8] - sum[5] * sum[7]) -
                   sum[1] * (sum[3] * sum[8] - sum[5] * sum[6]) +
                   sum[2] * (sum[3] * sum[7] - sum[4] * sum[6]);
    const LC s = detail::cheb_rec(l, e + h);
    const LC rhs = static_cast<long double>(l + 1) * s * s;
    return {Complex(static_cast<double>(det.real()), static_cast<double>(det.imag())),
            Complex(static_cast<double>(rhs.real()), static_cast<double>(rhs.imag()))};
}

} // namespace torsionlab
