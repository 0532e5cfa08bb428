#include <doctest.h>

#include <json.hpp>

#include "test_util.hpp"
#include "torsionlab/certify.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;
using namespace torsionlab::testutil;

TEST_SUITE("certify") {

TEST_CASE("eisenstein divisibility pattern") {
    CHECK(eisenstein_check(IntPolynomial{-1, 0, 2}, 2).valid);  // 2t^2 - 1
    CHECK_FALSE(eisenstein_check(IntPolynomial{-2, 0, 1}, 2).valid); // t^2 - 2: p | c_0
    CHECK(eisenstein_check(IntPolynomial{-5, 3, 0, 6}, 3).valid);    // 6t^3 + 3t - 5
    CHECK_THROWS_AS(eisenstein_check(IntPolynomial{7}, 2), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_check(IntPolynomial{-1, 0, 2}, 4), std::invalid_argument);
}

TEST_CASE("corollary certificate q P + r") {
    const EisensteinCertificate c1 = corollary_certificate(2, -1, IntPolynomial{0, 0, 1});
    CHECK(c1.valid);
    CHECK(c1.p == 2);
    CHECK(c1.Q == IntPolynomial{-1, 0, 2});

    const EisensteinCertificate c2 = corollary_certificate(6, 1, IntPolynomial{0, 1, 0, 1});
    CHECK(c2.valid);
    CHECK(c2.p == 2);

    CHECK_THROWS_AS(corollary_certificate(3, 3, IntPolynomial{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_certificate(1, 2, IntPolynomial{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(corollary_certificate(2, 1, IntPolynomial{5}), std::invalid_argument);
}

TEST_CASE("corollary certificate never fails when preconditions hold") {
    for (int trial = 0; trial < 200; ++trial) {
        const BigInt q = std::uniform_int_distribution<int>(2, 60)(rng());
        BigInt r = std::uniform_int_distribution<int>(-10, 10)(rng());
        if (gcd(q, r) != 1) continue;
        std::vector<BigInt> c;
        const int deg = std::uniform_int_distribution<int>(1, 6)(rng());
        for (int i = 0; i <= deg; ++i)
            c.emplace_back(std::uniform_int_distribution<int>(-20, 20)(rng()));
        const IntPolynomial p(std::move(c));
        if (p.degree() < 1) continue;
        CHECK(corollary_certificate(q, r, p).valid);
    }
}

TEST_CASE("monicity obstruction dispatch") {
    // J(4,2): m=2, n=1, q = m|n| = 2, P = S_1(y)^2 S_0(z)^2 = y^2
    const MonicityObstruction j42 = monicity_obstruction(DoubleTwistKnot(4, 1));
    CHECK(j42.q == 2);
    CHECK(j42.P == IntPolynomial{0, 0, 1});
    CHECK(j42.cert_plus.Q == IntPolynomial{1, 0, 2});
    CHECK(j42.cert_minus.Q == IntPolynomial{-1, 0, 2});
    CHECK(j42.riley_monic);
    CHECK(j42.valid);

    // J(5,2): odd, m=2, n=1, q = m = 2, P = S_1(y)^2 = y^2
    const MonicityObstruction j52 = monicity_obstruction(DoubleTwistKnot(5, 1));
    CHECK(j52.q == 2);
    CHECK(j52.P == IntPolynomial{0, 0, 1});
    CHECK(j52.valid);

    // J(3,-2): odd, m=1, n=-1, q = m+1 = 2, P = S_1(y)^2 = y^2
    const MonicityObstruction j3m2 = monicity_obstruction(DoubleTwistKnot(3, -1));
    CHECK(j3m2.q == 2);
    CHECK(j3m2.P == IntPolynomial{0, 0, 1});
    CHECK(j3m2.valid);

    // fibered cases carry no obstruction
    for (const char* name : {"J(2,-2)", "J(2,2)", "J(3,2)", "J(3,4)", "J(1,6)"}) {
        const DoubleTwistKnot knot = parse_knot_name(name);
        CHECK_FALSE(obstruction_applicable(knot));
        CHECK_THROWS_AS(monicity_obstruction(knot), std::invalid_argument);
    }
}

TEST_CASE("obstructions are valid across the scan grid") {
    for (int k = 2; k <= 8; ++k)
        for (int n = -4; n <= 4; ++n) {
            if (n == 0) continue;
            const DoubleTwistKnot knot(k, n);
            if (!obstruction_applicable(knot)) continue;
            CHECK(monicity_obstruction(knot).valid);
        }
}

TEST_CASE("JSON serialization carries decimal-string coefficients") {
    const std::string text = obstruction_to_json(monicity_obstruction(DoubleTwistKnot(4, 1)));
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["knot"] == "J(4,2)");
    CHECK(j["q"] == "2");
    CHECK(j["valid"] == true);
    REQUIRE(j["certificates"].size() == 2);
    CHECK(j["certificates"][0]["r"] == 1);
    CHECK(j["certificates"][0]["p"] == "2");
    CHECK(j["certificates"][0]["Q"] == std::vector<std::string>{"1", "0", "2"});
    CHECK(j["certificates"][1]["Q"] == std::vector<std::string>{"-1", "0", "2"});
}

TEST_CASE("brute-force algebraic integer spot checks") {
    CHECK(brute_force_algint_check(IntPolynomial{-1, 0, 2}, 4, 8));  // roots +-1/sqrt(2)
    CHECK_FALSE(brute_force_algint_check(IntPolynomial{-1, 1}, 4, 8)); // root 1 is in A
    CHECK(brute_force_algint_check(IntPolynomial{-2, 3, 3}, 4, 8));  // certified at p=3
}

TEST_CASE("certified knots have extreme coefficients far from +-1") {
    for (const char* name : {"J(4,2)", "J(5,2)", "J(3,-2)"}) {
        const DoubleTwistKnot knot = parse_knot_name(name);
        CHECK(monicity_obstruction(knot).valid);
        for (const TorsionReport& report : verify_theorem(knot)) {
            if (report.verdicts_withheld) continue;
            for (Complex c : {report.top_coeff, report.bottom_coeff}) {
                CHECK(std::min(std::abs(c - 1.0), std::abs(c + 1.0)) > 1e-4);
            }
        }
    }
}

} // TEST_SUITE
