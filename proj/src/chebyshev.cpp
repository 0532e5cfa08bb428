#include "torsionlab/chebyshev.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace torsionlab {

namespace {

std::mutex g_cheb_mutex;
std::vector<IntPolynomial> g_cheb_table; // g_cheb_table[l] = S_l, l >= 0

IntPolynomial cheb_nonneg(int l) {
    std::lock_guard<std::mutex> lock(g_cheb_mutex);
    if (g_cheb_table.empty()) {
        g_cheb_table.push_back(IntPolynomial{1});    // S_0
        g_cheb_table.push_back(IntPolynomial{0, 1}); // S_1
    }
    const IntPolynomial v{0, 1};
    while (static_cast<int>(g_cheb_table.size()) <= l) {
        size_t n = g_cheb_table.size();
        g_cheb_table.push_back(v * g_cheb_table[n - 1] - g_cheb_table[n - 2]);
    }
    return g_cheb_table[static_cast<size_t>(l)];
}

Complex cheb_eval_recurrence(int l, Complex v) {
    if (l == -1) return 0.0;
    if (l < -1) return -cheb_eval_recurrence(-l - 2, v);
    Complex prev = 0.0; // S_{-1}
    Complex cur = 1.0;  // S_0
    for (int i = 1; i <= l; ++i) {
        Complex next = v * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

IntPolynomial cheb_poly(int l) {
    if (l >= 0) return cheb_nonneg(l);
    if (l == -1) return IntPolynomial::zero();
    return -cheb_nonneg(-l - 2);
}

Complex cheb_eval(int l, Complex v) {
    // v = a + 1/a; pick the root of a^2 - v a + 1 = 0 with larger modulus
    Complex disc = std::sqrt(v * v - 4.0);
    Complex a = 0.5 * (v + disc);
    if (std::abs(a) < 1.0) a = 0.5 * (v - disc);
    Complex delta = a - 1.0 / a;
    if (std::abs(delta) < 1e-6) return cheb_eval_recurrence(l, v);
    return (std::pow(a, l + 1) - std::pow(a, -l - 1)) / delta;
}

ChebRootFamilies cheb_root_check(int l) {
    if (l < 1) throw std::invalid_argument("cheb_root_check: l must be >= 1");
    ChebRootFamilies fam;
    fam.roots_s.reserve(static_cast<size_t>(l));
    fam.roots_diff.reserve(static_cast<size_t>(l));
    for (int j = 1; j <= l; ++j) {
        fam.roots_s.push_back(2.0 * std::cos(j * M_PI / (l + 1)));
        fam.roots_diff.push_back(2.0 * std::cos((2 * j - 1) * M_PI / (2 * l + 1)));
    }
    return fam;
}

} // namespace torsionlab
