#ifndef TORSIONLAB_KNOTS_HPP
#define TORSIONLAB_KNOTS_HPP

#include <stdexcept>
#include <string>

#include "torsionlab/fox.hpp"
#include "torsionlab/tolerances.hpp"

namespace torsionlab {

/// The double twist knot J(k, 2n), k >= 1, n != 0 (mirror images with
/// k < 0 are out of scope). k = 2m or k = 2m + 1.
struct DoubleTwistKnot {
    int k;
    int n;
    int m; // floor(k / 2)

    DoubleTwistKnot(int k, int n);

    bool odd() const { return k % 2 != 0; }
    /// "J(k,2n)", e.g. J(3,-4) for k=3, n=-2
    std::string name() const;

    bool operator==(const DoubleTwistKnot& o) const { return k == o.k && n == o.n; }
};

/// Parses "J(<k>,<2n>)"; the second integer must be even and nonzero.
/// Throws std::invalid_argument on malformed names or invalid parameters.
DoubleTwistKnot parse_knot_name(const std::string& name);

struct KnotFacts {
    int genus = 0;
    bool fibered = false;
    bool hyperbolic = false;
};

/// Genus and fibering from the closed-form case tables; hyperbolicity from
/// the representation-theoretic criterion (the parabolic Riley polynomial
/// has a nonreal root), so the flag can never disagree with what the
/// torsion pipeline finds. Throws for J(1,2), which is the trivial knot.
KnotFacts classify(const DoubleTwistKnot& knot, const Tolerances& tol = {});

/// The word w of the knot group presentation <a, b | w^n a = b w^n>:
/// (bA)^m (Ba)^m for k = 2m, and (bA)^m ba (Ba)^m for k = 2m + 1.
FreeWord word_w(const DoubleTwistKnot& knot);

/// The relator r = w^n a w^-n b^-1, freely reduced.
FreeWord relator(const DoubleTwistKnot& knot);

} // namespace torsionlab

#endif
