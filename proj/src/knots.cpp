#include "torsionlab/knots.hpp"

#include <cstdlib>
#include <sstream>

#include "torsionlab/riley.hpp"

namespace torsionlab {

DoubleTwistKnot::DoubleTwistKnot(int k_, int n_) : k(k_), n(n_), m(k_ / 2) {
    if (k < 1) throw std::invalid_argument("DoubleTwistKnot: k must be >= 1");
    if (n == 0) throw std::invalid_argument("DoubleTwistKnot: n must be nonzero");
}

std::string DoubleTwistKnot::name() const {
    std::ostringstream os;
    os << "J(" << k << "," << 2 * n << ")";
    return os.str();
}

DoubleTwistKnot parse_knot_name(const std::string& name) {
    std::string s;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 6 || (s[0] != 'J' && s[0] != 'j') || s[1] != '(' || s.back() != ')')
        throw std::invalid_argument("knot name must have the form J(k,2n): " + name);
    std::string body = s.substr(2, s.size() - 3);
    size_t comma = body.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("knot name must have the form J(k,2n): " + name);
    auto parse_int = [&](const std::string& tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("knot name has a non-integer parameter: " + name);
        }
        if (pos != tok.size())
            throw std::invalid_argument("knot name has a non-integer parameter: " + name);
        return v;
    };
    int k = parse_int(body.substr(0, comma));
    int twists = parse_int(body.substr(comma + 1));
    if (twists % 2 != 0)
        throw std::invalid_argument("second parameter of J(k,2n) must be even: " + name);
    if (twists == 0) throw std::invalid_argument("second parameter of J(k,2n) must be nonzero");
    return DoubleTwistKnot(k, twists / 2);
}

KnotFacts classify(const DoubleTwistKnot& knot, const Tolerances& tol) {
    if (knot.k == 1 && knot.n == 1)
        throw std::invalid_argument("J(1,2) is the trivial knot; genus/fibering do not apply");
    KnotFacts f;
    if (!knot.odd())
        f.genus = 1;
    else if (knot.k >= 3)
        f.genus = std::abs(knot.n);
    else // k == 1
        f.genus = knot.n >= 1 ? knot.n - 1 : -knot.n;
    f.fibered = knot.k == 1 || (knot.k == 2 && std::abs(knot.n) == 1) ||
                (knot.k == 3 && knot.n >= 1);
    f.hyperbolic = has_nonreal_parabolic_root(knot, tol);
    return f;
}

FreeWord word_w(const DoubleTwistKnot& knot) {
    const FreeWord ba_inv = FreeWord::parse("bA");
    const FreeWord binv_a = FreeWord::parse("Ba");
    FreeWord w = ba_inv.pow(knot.m);
    if (knot.odd()) w = w * FreeWord::parse("ba");
    return w * binv_a.pow(knot.m);
}

FreeWord relator(const DoubleTwistKnot& knot) {
    const FreeWord w = word_w(knot);
    const FreeWord wn = w.pow(knot.n);
    return wn * FreeWord::parse("a") * wn.inverse() * FreeWord::parse("B");
}

} // namespace torsionlab
