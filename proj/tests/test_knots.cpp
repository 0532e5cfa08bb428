#include <doctest.h>

#include "test_util.hpp"
#include "torsionlab/knots.hpp"
#include "torsionlab/riley.hpp"

using namespace torsionlab;
using namespace torsionlab::testutil;

TEST_SUITE("knots") {

TEST_CASE("classification matches the case tables") {
    auto f46 = classify(DoubleTwistKnot(4, 3)); // J(4,6)
    CHECK(f46.genus == 1);
    CHECK_FALSE(f46.fibered);
    CHECK(f46.hyperbolic);

    auto f5m6 = classify(DoubleTwistKnot(5, -3)); // J(5,-6)
    CHECK(f5m6.genus == 3);
    CHECK_FALSE(f5m6.fibered);

    auto f34 = classify(DoubleTwistKnot(3, 2)); // J(3,4)
    CHECK(f34.genus == 2);
    CHECK(f34.fibered);
    CHECK(f34.hyperbolic);

    auto f18 = classify(DoubleTwistKnot(1, 4)); // J(1,8)
    CHECK(f18.genus == 3);
    CHECK(f18.fibered);
    CHECK_FALSE(f18.hyperbolic);

    // the all-real-root (trefoil) instance under the formula convention
    auto trefoil = classify(DoubleTwistKnot(2, 1)); // J(2,2)
    CHECK(trefoil.genus == 1);
    CHECK(trefoil.fibered);
    CHECK_FALSE(trefoil.hyperbolic);

    auto fig8 = classify(DoubleTwistKnot(2, -1)); // J(2,-2)
    CHECK(fig8.genus == 1);
    CHECK(fig8.fibered);
    CHECK(fig8.hyperbolic);
}

TEST_CASE("trivial and invalid parameters are rejected") {
    CHECK_THROWS_AS(classify(DoubleTwistKnot(1, 1)), std::invalid_argument); // J(1,2) unknot
    CHECK_THROWS_AS(DoubleTwistKnot(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(DoubleTwistKnot(-3, 1), std::invalid_argument);
    CHECK_THROWS_AS(DoubleTwistKnot(2, 0), std::invalid_argument);
}

TEST_CASE("name parsing and printing") {
    const DoubleTwistKnot knot = parse_knot_name("J(3,-4)");
    CHECK(knot.k == 3);
    CHECK(knot.n == -2);
    CHECK(knot.m == 1);
    CHECK(knot.name() == "J(3,-4)");
    CHECK(parse_knot_name(" j( 2 , -2 ) ").name() == "J(2,-2)");

    CHECK_THROWS_AS(parse_knot_name("J(3,3)"), std::invalid_argument); // odd second parameter
    CHECK_THROWS_AS(parse_knot_name("J(3,0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot_name("K(2,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot_name("J(2,)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_knot_name("J(0,2)"), std::invalid_argument);
}

TEST_CASE("the group word w") {
    CHECK(word_w(DoubleTwistKnot(2, 1)) == FreeWord::parse("bABa"));
    CHECK(word_w(DoubleTwistKnot(1, 2)) == FreeWord::parse("ba"));
    CHECK(word_w(DoubleTwistKnot(3, 1)) == FreeWord::parse("bAbaBa"));

    for (int k = 1; k <= 9; ++k) {
        const DoubleTwistKnot knot(k, 2);
        const FreeWord w = word_w(knot);
        CHECK(w.exponent_sum() == (k % 2 == 0 ? 0 : 2));
        CHECK(static_cast<int>(w.length()) == 2 * k);
    }
}

TEST_CASE("the relator w^n a w^-n b^-1") {
    CHECK(relator(DoubleTwistKnot(1, 1)) == FreeWord::parse("baBB"));

    for (int k = 1; k <= 6; ++k)
        for (int n : {-3, -1, 1, 2}) {
            const DoubleTwistKnot knot(k, n);
            const FreeWord r = relator(knot);
            CHECK(r.exponent_sum() == 0);
            CHECK(r.length() <= 4 * word_w(knot).length() * static_cast<size_t>(std::abs(n)) + 2);
        }
}

TEST_CASE("representations at Riley roots satisfy the defining relation") {
    for (const char* name : {"J(2,-2)", "J(3,2)", "J(5,-4)", "J(4,4)"}) {
        const DoubleTwistKnot knot = parse_knot_name(name);
        const FreeWord w = word_w(knot);
        const FreeWord lhs = w.pow(knot.n) * FreeWord::parse("a");
        const FreeWord rhs = FreeWord::parse("b") * w.pow(knot.n);
        for (const ParabolicRoot& root : parabolic_roots(knot).roots) {
            const Sl2Rep rep = Sl2Rep::parabolic(root.y);
            const ComplexMatrix diff = rho_word(rep, lhs) - rho_word(rep, rhs);
            CHECK(diff.max_abs() < 1e-8);
            const ComplexMatrix rel =
                rho_word(rep, relator(knot)) - ComplexMatrix::identity(2);
            CHECK(rel.max_abs() < 1e-8);
        }
    }
}

TEST_CASE("genus is mirror-consistent and hyperbolicity matches the closed-form list") {
    for (int k = 2; k <= 8; ++k)
        for (int n = -3; n <= 3; ++n) {
            if (n == 0) continue;
            const KnotFacts f = classify(DoubleTwistKnot(k, n));
            if (k % 2 == 0)
                CHECK(f.genus == 1);
            else
                CHECK(f.genus == std::abs(n));
            // under the formula convention the only non-hyperbolic knot with
            // k >= 2 is the trefoil J(2,2)
            CHECK(f.hyperbolic == !(k == 2 && n == 1));
        }
}

} // TEST_SUITE
