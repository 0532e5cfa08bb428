// Internal: closed-form Riley evaluations templated on the scalar ring, so
// the root polish and the torsion pipeline can run in extended precision.
// Uses the Chebyshev recurrence only (ring ops), which keeps dual-number
// differentiation trivial.
#ifndef TORSIONLAB_SRC_CLOSED_EVAL_HPP
#define TORSIONLAB_SRC_CLOSED_EVAL_HPP

#include <complex>

#include "torsionlab/knots.hpp"

namespace torsionlab::detail {

/// value + derivative with respect to y
template <typename C>
struct Dual {
    C v{};
    C d{};

    Dual() = default;
    Dual(double x) : v(x) {}
    Dual(C v_, C d_) : v(v_), d(d_) {}

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.v * b.v, a.d * b.v + a.v * b.d};
    }
};

template <typename R>
R cheb_rec(int l, const R& v) {
    if (l == -1) return R(0.0);
    if (l < -1) return -cheb_rec(-l - 2, v);
    R prev = R(0.0);
    R cur = R(1.0);
    for (int i = 1; i <= l; ++i) {
        R next = v * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <typename R>
R trace_w_closed_t(const DoubleTwistKnot& knot, const R& x2, const R& y) {
    const R sm = cheb_rec(knot.m, y);
    const R sm1 = cheb_rec(knot.m - 1, y);
    const R two = R(2.0);
    if (!knot.odd()) return two + (y - two) * (y + two - x2) * sm1 * sm1;
    const R d = sm - sm1;
    return two - (y + two - x2) * d * d;
}

template <typename R>
R riley_t_eval_t(const DoubleTwistKnot& knot, const R& x2, const R& y) {
    const R sm = cheb_rec(knot.m, y);
    const R sm1 = cheb_rec(knot.m - 1, y);
    const R excess = y + R(2.0) - x2;
    if (!knot.odd()) return R(1.0) - excess * sm1 * (sm - (y - R(1.0)) * sm1);
    return R(1.0) + excess * sm1 * (sm - sm1);
}

template <typename R>
R riley_eval_t(const DoubleTwistKnot& knot, const R& x2, const R& y) {
    const R z = trace_w_closed_t(knot, x2, y);
    const R t = riley_t_eval_t(knot, x2, y);
    return t * cheb_rec(knot.n - 1, z) - cheb_rec(knot.n - 2, z);
}

/// scale against which |R(x^2=4, y)| is judged small
template <typename C>
long double riley_eval_scale(const DoubleTwistKnot& knot, const C& y) {
    const C z = trace_w_closed_t(knot, C(4.0L), y);
    return 1.0L +
           static_cast<long double>(std::abs(riley_t_eval_t(knot, C(4.0L), y) *
                                             cheb_rec(knot.n - 1, z))) +
           static_cast<long double>(std::abs(cheb_rec(knot.n - 2, z)));
}

/// Damped Newton against the closed form in extended precision. The power
/// basis of R is ill-conditioned for the larger knots, so the initial
/// approximations can be far off; only steps that shrink |R| are accepted.
/// Returns the polished root and its relative closed-form residual.
inline std::pair<Complex, double> polish_parabolic_root(const DoubleTwistKnot& knot, Complex y0) {
    using C = std::complex<long double>;
    C y(y0.real(), y0.imag());
    long double ry = std::abs(riley_eval_t(knot, C(4.0L), y));
    for (int i = 0; i < 60; ++i) {
        const Dual<C> r = riley_eval_t(knot, Dual<C>(4.0), Dual<C>{y, C(1.0L)});
        if (std::abs(r.d) == 0.0L) break;
        C step = r.v / r.d;
        bool accepted = false;
        for (int halving = 0; halving < 20; ++halving) {
            const C cand = y - step;
            const long double rc = std::abs(riley_eval_t(knot, C(4.0L), cand));
            if (rc < ry) {
                y = cand;
                ry = rc;
                accepted = true;
                break;
            }
            step *= 0.5L;
        }
        if (!accepted || std::abs(step) <= 1e-18L * (1.0L + std::abs(y))) break;
    }
    const double residual = static_cast<double>(ry / riley_eval_scale(knot, y));
    return {Complex(static_cast<double>(y.real()), static_cast<double>(y.imag())), residual};
}

} // namespace torsionlab::detail

#endif
