#include "torsionlab/certify.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "torsionlab/riley.hpp"
#include "torsionlab/roots.hpp"

namespace torsionlab {

namespace {

bool is_prime(const BigInt& p) {
    if (p < 2) return false;
    for (BigInt d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt smallest_prime_factor(BigInt q) {
    if (q < 0) q = -q;
    for (BigInt d = 2; d * d <= q; ++d)
        if (q % d == 0) return d;
    return q;
}

} // namespace

EisensteinCertificate eisenstein_check(const IntPolynomial& Q, const BigInt& p) {
    if (Q.degree() < 1) throw std::invalid_argument("eisenstein_check: Q must be non-constant");
    if (!is_prime(p)) throw std::invalid_argument("eisenstein_check: p must be prime");
    bool valid = Q.constant_term() % p != 0;
    for (int i = 1; i <= Q.degree() && valid; ++i)
        if (Q.coeff(i) % p != 0) valid = false;
    return {Q, p, valid};
}

EisensteinCertificate corollary_certificate(const BigInt& q, const BigInt& r,
                                            const IntPolynomial& P) {
    if (abs(q) < 2) throw std::invalid_argument("corollary_certificate: |q| must be >= 2");
    if (gcd(q, r) != 1) throw std::invalid_argument("corollary_certificate: q, r must be coprime");
    if (P.degree() < 1) throw std::invalid_argument("corollary_certificate: P must be non-constant");
    EisensteinCertificate cert =
        eisenstein_check(P * q + IntPolynomial::constant(r), smallest_prime_factor(q));
    if (!cert.valid)
        throw std::logic_error("corollary_certificate: construction failed its guarantee");
    return cert;
}

bool obstruction_applicable(const DoubleTwistKnot& knot) {
    if (!knot.odd()) return knot.m * std::abs(knot.n) >= 2;
    if (knot.k == 1) return false;
    return knot.n <= -1 || knot.m >= 2;
}

MonicityObstruction monicity_obstruction(const DoubleTwistKnot& knot) {
    if (!obstruction_applicable(knot))
        throw std::invalid_argument("monicity_obstruction: no obstruction applicable, " +
                                    knot.name() + " falls in a fibered case");

    BigInt q;
    IntPolynomial P;
    if (!knot.odd()) {
        q = knot.m * std::abs(knot.n);
        const IntPolynomial z = build_riley(knot, 4).z_poly;
        P = cheb_poly(knot.m - 1).squared() * cheb_poly(std::abs(knot.n) - 1).compose(z).squared();
    } else if (knot.n >= 1) {
        q = knot.m;
        P = cheb_poly(knot.m - 1).squared();
    } else {
        q = knot.m + 1;
        P = cheb_poly(knot.m).squared();
    }

    MonicityObstruction ob{knot, q, P, corollary_certificate(q, 1, P),
                           corollary_certificate(q, -1, P), false, false};
    const BigInt lead = build_riley(knot, 4).riley.leading();
    ob.riley_monic = lead == 1 || lead == -1;
    ob.valid = ob.cert_plus.valid && ob.cert_minus.valid && ob.riley_monic;
    return ob;
}

std::string obstruction_to_json(const MonicityObstruction& ob) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["knot"] = ob.knot.name();
    j["q"] = ob.q.str();
    j["riley_monic"] = ob.riley_monic;
    j["valid"] = ob.valid;
    auto cert_json = [](const EisensteinCertificate& c, int r) {
        nlohmann::json cj;
        cj["r"] = r;
        cj["p"] = c.p.str();
        std::vector<std::string> coeffs;
        for (const auto& co : c.Q.coeffs()) coeffs.push_back(co.str());
        cj["Q"] = coeffs;
        cj["valid"] = c.valid;
        return cj;
    };
    j["certificates"] = {cert_json(ob.cert_plus, 1), cert_json(ob.cert_minus, -1)};
    return j.dump(2);
}

bool brute_force_algint_check(const IntPolynomial& Q, int degree_bound, int height_bound) {
    if (Q.degree() < 1) throw std::invalid_argument("brute_force_algint_check: Q must be non-constant");
    const std::vector<Complex> q_roots = poly_roots(Q);
    const double eps = 1e-8;

    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<int> c(static_cast<size_t>(d), -height_bound); // low coefficients of monic f
        while (true) {
            // f(x) = x^d + c[d-1] x^(d-1) + ... + c[0]
            for (Complex y0 : q_roots) {
                Complex f = 1.0;
                for (int i = d - 1; i >= 0; --i)
                    f = f * y0 + static_cast<double>(c[static_cast<size_t>(i)]);
                // if f has a root within eps of y0 then |f(y0)| <= eps * (|y0| + H + 1)^(d-1)
                const double bound = 2.0 * eps * std::pow(std::abs(y0) + height_bound + 1.0, d - 1);
                if (std::abs(f) > bound) continue;

                std::vector<Complex> fc(static_cast<size_t>(d) + 1);
                for (int i = 0; i < d; ++i) fc[static_cast<size_t>(i)] = static_cast<double>(c[static_cast<size_t>(i)]);
                fc[static_cast<size_t>(d)] = 1.0;
                std::vector<Complex> f_roots;
                try {
                    f_roots = poly_roots(fc);
                } catch (const RootFindingError& e) {
                    f_roots = e.best_iterate;
                }
                for (Complex fr : f_roots)
                    if (std::abs(fr - y0) < eps) return false;
            }
            // odometer over coefficient tuples
            int pos = 0;
            while (pos < d && ++c[static_cast<size_t>(pos)] > height_bound) {
                c[static_cast<size_t>(pos)] = -height_bound;
                ++pos;
            }
            if (pos == d) break;
        }
    }
    return true;
}

} // namespace torsionlab
