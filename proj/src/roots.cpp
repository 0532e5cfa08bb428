#include "torsionlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace torsionlab {

namespace {

using CL = std::complex<long double>;

struct EvalPair {
    Complex p;
    Complex dp;
};

EvalPair horner(const std::vector<Complex>& c, Complex z) {
    Complex p = 0.0, dp = 0.0;
    for (size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

double eval_scale(const std::vector<Complex>& c, Complex z) {
    double az = std::abs(z);
    double s = 0.0, zp = 1.0;
    for (const auto& ci : c) {
        s += std::abs(ci) * zp;
        zp *= az;
    }
    return s;
}

// a few Newton steps in extended precision
Complex polish(const std::vector<CL>& c, Complex z0) {
    CL z(z0.real(), z0.imag());
    for (int it = 0; it < 8; ++it) {
        CL p = 0.0L, dp = 0.0L;
        for (size_t i = c.size(); i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
        }
        if (std::abs(dp) == 0.0L) break;
        CL step = p / dp;
        z -= step;
        if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
    }
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::vector<Complex> aberth(const std::vector<Complex>& c, int attempt) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<Complex> z(static_cast<size_t>(d));
    double r = std::pow(std::abs(c.front() / c.back()), 1.0 / d);
    r = std::clamp(r, 1e-3, 1e3) * (1.0 + 0.25 * attempt);
    const double phase0 = 0.376 + 0.741 * attempt;
    for (int i = 0; i < d; ++i) {
        double th = 2.0 * M_PI * i / d + phase0;
        z[static_cast<size_t>(i)] = Complex(r * std::cos(th), r * std::sin(th));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double worst_step = 0.0;
        double worst_res = 0.0;
        for (int i = 0; i < d; ++i) {
            auto [p, dp] = horner(c, z[static_cast<size_t>(i)]);
            worst_res = std::max(worst_res, std::abs(p) / (eval_scale(c, z[static_cast<size_t>(i)]) + 1e-300));
            if (p == Complex(0.0)) continue;
            if (dp == Complex(0.0)) {
                z[static_cast<size_t>(i)] += Complex(1e-8, 1e-8);
                worst_step = 1.0;
                continue;
            }
            Complex newton = p / dp;
            Complex sum = 0.0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
                sum += 1.0 / diff;
            }
            Complex denom = 1.0 - newton * sum;
            Complex step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            z[static_cast<size_t>(i)] -= step;
            worst_step = std::max(worst_step,
                                  std::abs(step) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst_step < 1e-14 || worst_res < 1e-16) break;
    }
    return z;
}

} // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, double root_tol) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
    if (static_cast<int>(c.size()) - 1 < 1)
        throw std::invalid_argument("poly_roots: degree must be >= 1");

    std::vector<Complex> roots;
    // exact zero constant terms factor out as roots at the origin
    size_t nz = 0;
    while (nz < c.size() - 1 && c[nz] == Complex(0.0)) ++nz;
    roots.assign(nz, Complex(0.0));
    if (nz > 0) c.erase(c.begin(), c.begin() + static_cast<long>(nz));
    if (c.size() == 1) return roots;

    std::vector<CL> cl(c.size());
    for (size_t i = 0; i < c.size(); ++i) cl[i] = CL(c[i].real(), c[i].imag());

    std::vector<Complex> best;
    double best_res = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Complex> z = aberth(c, attempt);
        for (auto& zi : z) zi = polish(cl, zi);
        double res = 0.0;
        for (const auto& zi : z)
            res = std::max(res, relative_root_residual(c, zi));
        if (res < best_res) {
            best_res = res;
            best = z;
        }
        if (res <= root_tol) break;
    }
    if (best_res > root_tol) {
        best.insert(best.begin(), roots.begin(), roots.end());
        throw RootFindingError("poly_roots: iteration did not reach the residual bound", best);
    }

    // conjugate symmetrization for real input
    bool real_input = true;
    for (const auto& ci : c)
        if (ci.imag() != 0.0) real_input = false;
    if (real_input) {
        for (auto& zi : best)
            if (std::abs(zi.imag()) < 1e-10 * (1.0 + std::abs(zi.real()))) zi = Complex(zi.real(), 0.0);
        std::vector<bool> used(best.size(), false);
        for (size_t i = 0; i < best.size(); ++i) {
            if (used[i] || best[i].imag() == 0.0) continue;
            size_t match = i;
            double dmin = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < best.size(); ++j) {
                if (j == i || used[j] || best[j].imag() == 0.0) continue;
                double dd = std::abs(best[i] - std::conj(best[j]));
                if (dd < dmin) {
                    dmin = dd;
                    match = j;
                }
            }
            if (match != i && dmin < 1e-6 * (1.0 + std::abs(best[i]))) {
                Complex avg = 0.5 * (best[i] + std::conj(best[match]));
                best[i] = avg;
                best[match] = std::conj(avg);
                used[i] = used[match] = true;
            }
        }
    }

    roots.insert(roots.end(), best.begin(), best.end());
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<Complex> poly_roots(const IntPolynomial& p, double root_tol) {
    std::vector<Complex> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(p.coeffs()[i]);
    return poly_roots(c, root_tol);
}

double relative_root_residual(const std::vector<Complex>& coeffs, Complex z) {
    double s = eval_scale(coeffs, z);
    if (s == 0.0) return 0.0;
    return std::abs(horner(coeffs, z).p) / s;
}

double relative_root_residual(const IntPolynomial& p, Complex z) {
    std::vector<Complex> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(p.coeffs()[i]);
    return relative_root_residual(c, z);
}

} // namespace torsionlab
