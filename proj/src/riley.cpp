#include "torsionlab/riley.hpp"

#include <algorithm>
#include <cmath>

#include "closed_eval.hpp"
#include "torsionlab/roots.hpp"

namespace torsionlab {

RileyData build_riley(const DoubleTwistKnot& knot, int x_squared) {
    const int m = knot.m;
    const IntPolynomial y{0, 1};
    const IntPolynomial y_excess = y + IntPolynomial{2 - x_squared}; // y + 2 - x^2
    const IntPolynomial sm = cheb_poly(m);
    const IntPolynomial sm1 = cheb_poly(m - 1);

    IntPolynomial z, t;
    if (!knot.odd()) {
        z = IntPolynomial{2} + (y - IntPolynomial{2}) * y_excess * sm1 * sm1;
        t = IntPolynomial{1} - y_excess * sm1 * (sm - (y - IntPolynomial{1}) * sm1);
    } else {
        const IntPolynomial d = sm - sm1;
        z = IntPolynomial{2} - y_excess * d * d;
        t = IntPolynomial{1} + y_excess * sm1 * d;
    }
    IntPolynomial r = t * cheb_poly(knot.n - 1).compose(z) - cheb_poly(knot.n - 2).compose(z);
    return {knot, x_squared, std::move(z), std::move(t), std::move(r)};
}

Complex riley_t_eval(const DoubleTwistKnot& knot, Complex x_squared, Complex y) {
    const Complex sm = cheb_eval(knot.m, y);
    const Complex sm1 = cheb_eval(knot.m - 1, y);
    const Complex excess = y + 2.0 - x_squared;
    if (!knot.odd()) return 1.0 - excess * sm1 * (sm - (y - 1.0) * sm1);
    return 1.0 + excess * sm1 * (sm - sm1);
}

Complex riley_eval(const DoubleTwistKnot& knot, Complex x_squared, Complex y) {
    const Complex z = trace_w_closed(knot, x_squared, y);
    const Complex t = riley_t_eval(knot, x_squared, y);
    return t * cheb_eval(knot.n - 1, z) - cheb_eval(knot.n - 2, z);
}

RileyMatrixCheck riley_matrix_check(const DoubleTwistKnot& knot, const Sl2Rep& rep) {
    const Complex closed = riley_eval(knot, rep.x_squared(), rep.y);
    const ComplexMatrix wn = rho_word(rep, word_w(knot).pow(knot.n));
    const Complex direct = wn.at(0, 0) + (1.0 / rep.M - rep.M) * wn.at(0, 1);
    return {closed, direct};
}

ParabolicRootSet parabolic_roots(const DoubleTwistKnot& knot, const Tolerances& tol) {
    ParabolicRootSet out{build_riley(knot, 4), {}, false};
    const IntPolynomial& r = out.data.riley;
    if (r.degree() < 1) {
        out.degenerate_constant = true;
        return out;
    }
    std::vector<Complex> ys = poly_roots(r, tol.root_tol);
    out.roots.reserve(ys.size());
    for (Complex y0 : ys) {
        auto [y, residual] = detail::polish_parabolic_root(knot, y0);
        ParabolicRoot pr;
        pr.y = y;
        pr.residual = residual;
        pr.nonreal = std::abs(y.imag()) > tol.imag_tol;
        const Complex z = trace_w_closed(knot, 4.0, y);
        pr.s_m1_y = std::abs(cheb_eval(knot.m - 1, y));
        pr.s_m_y = std::abs(cheb_eval(knot.m, y));
        pr.s_n1_z = std::abs(cheb_eval(std::abs(knot.n) - 1, z));
        if (!knot.odd())
            pr.nondegenerate = pr.s_m1_y * pr.s_n1_z > tol.nondegen_margin;
        else
            pr.nondegenerate = pr.s_m_y * pr.s_m1_y > tol.nondegen_margin;
        out.roots.push_back(pr);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const ParabolicRoot& a, const ParabolicRoot& b) {
        if (a.y.imag() != b.y.imag()) return a.y.imag() > b.y.imag();
        return a.y.real() < b.y.real();
    });
    return out;
}

bool has_nonreal_parabolic_root(const DoubleTwistKnot& knot, const Tolerances& tol) {
    ParabolicRootSet set = parabolic_roots(knot, tol);
    for (const auto& r : set.roots)
        if (r.nonreal) return true;
    return false;
}

} // namespace torsionlab
