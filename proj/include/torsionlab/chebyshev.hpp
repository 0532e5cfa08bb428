#ifndef TORSIONLAB_CHEBYSHEV_HPP
#define TORSIONLAB_CHEBYSHEV_HPP

#include <vector>

#include "torsionlab/int_polynomial.hpp"

namespace torsionlab {

/// Chebyshev polynomial of the second kind S_l(v), defined by S_0 = 1,
/// S_1 = v, S_l = v S_{l-1} - S_{l-2}, extended to negative indices by
/// S_{-l} = -S_{l-2}. Exact coefficients; memoized across calls.
IntPolynomial cheb_poly(int l);

/// S_l evaluated at a complex point. Uses the closed form
/// (a^(l+1) - a^(-l-1)) / (a - a^(-1)) with v = a + 1/a away from +-2 and
/// falls back to the recurrence when |a - 1/a| < 1e-6.
Complex cheb_eval(int l, Complex v);

/// The two classical root families for l >= 1:
/// roots_s[j-1] = 2 cos(j pi / (l+1)) are the roots of S_l, and
/// roots_diff[j-1] = 2 cos((2j-1) pi / (2l+1)) are the roots of
/// S_l - S_{l-1}. All lie in (-2, 2).
struct ChebRootFamilies {
    std::vector<double> roots_s;
    std::vector<double> roots_diff;
};

ChebRootFamilies cheb_root_check(int l);

} // namespace torsionlab

#endif
