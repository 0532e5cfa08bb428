"""Exact symbolic cross-check of the whole pipeline.

Recomputes the Riley polynomial and the adjoint twisted Alexander
polynomial with sympy (exact rational matrices, symbolic t), reduces the
division remainder mod the minimal polynomial of the root, and compares
coefficientwise against the library's numeric values. Everything here is
derived independently of the C++ implementation: words are reduced by a
tiny local reducer, the Fox derivative is recomputed from its defining
rules, and determinants are sympy's.

Requires sympy; skipped when unavailable.
"""

import pytest

sp = pytest.importorskip("sympy")

import torsionlab as tl

y, t = sp.symbols("y t")


def word_letters(k):
    m = k // 2
    w = [("b", 1), ("a", -1)] * m
    if k % 2 == 1:
        w += [("b", 1), ("a", 1)]
    return w + [("b", -1), ("a", 1)] * m


def reduce_word(letters):
    out = []
    for l in letters:
        if out and out[-1][0] == l[0] and out[-1][1] == -l[1]:
            out.pop()
        else:
            out.append(l)
    return out


def inverse(letters):
    return [(g, -e) for (g, e) in reversed(letters)]


def relator(k, n):
    w = word_letters(k)
    wn = reduce_word(w * n if n > 0 else inverse(w) * (-n))
    return reduce_word(wn + [("a", 1)] + inverse(wn) + [("b", -1)])


def fox_a(word):
    terms, prefix = [], []
    for (g, e) in word:
        if g == "a":
            if e > 0:
                terms.append((list(prefix), 1))
            else:
                terms.append((reduce_word(prefix + [("a", -1)]), -1))
        prefix = reduce_word(prefix + [(g, e)])
    return terms


def ad(V):
    e, f, g, h = V[0, 0], V[0, 1], V[1, 0], V[1, 1]
    return sp.Matrix([[e * e, -2 * e * f, -f * f], [-e * g, e * h + f * g, f * h],
                      [-g * g, 2 * g * h, h * h]])


A2 = sp.Matrix([[1, 1], [0, 1]])
B2 = sp.Matrix([[1, 0], [2 - y, 1]])
MATS = {("a", 1): A2, ("a", -1): A2.inv(), ("b", 1): B2, ("b", -1): B2.inv()}


def phi_word(word):
    V = sp.eye(2)
    exp = 0
    for l in word:
        V = V * MATS[l]
        exp += l[1]
    return t ** exp * ad(sp.expand(V))


def sympy_riley(k, n):
    V = sp.eye(2)
    for l in word_letters(k):
        V = V * MATS[l]
    Vn = V ** n if n > 0 else (V.inv()) ** (-n)
    return sp.Poly(sp.expand(Vn[0, 0]), y)


def exact_delta(k, n, minpoly):
    """Delta as exact coefficients in Z[y]/(minpoly), lowest exponent first."""
    N = sp.zeros(3, 3)
    for prefix, sign in fox_a(relator(k, n)):
        N += sign * phi_word(prefix)
    num, den_t = sp.fraction(sp.together(sp.expand(N.det())))
    assert den_t.as_poly(t).is_monomial  # only a power of t below the line
    den = sp.Poly(sp.expand((1 - t) * (t ** 2 - 2 * t + 1)), t, domain=sp.ZZ[y])
    q, r = sp.div(sp.Poly(num, t, domain=sp.ZZ[y]), den, t)
    for c in r.all_coeffs():
        assert sp.rem(sp.expand(c), minpoly, y) == 0  # division exact mod minpoly
    coeffs = [sp.rem(sp.expand(c), minpoly, y) for c in q.all_coeffs()]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return list(reversed(coeffs))


@pytest.mark.parametrize("kn", [(2, -1), (3, 1), (4, 1), (3, -1)])
def test_riley_matches_symbolic(kn):
    k, n = kn
    mine = tl.build_riley(tl.Knot(k, n)).riley
    oracle = list(reversed(sympy_riley(k, n).all_coeffs()))
    assert mine == oracle


@pytest.mark.parametrize("name", ["J(2,-2)", "J(3,2)", "J(4,2)", "J(3,-2)"])
def test_delta_matches_symbolic(name):
    knot = tl.parse_knot(name)
    r_coeffs = tl.build_riley(knot).riley
    minpoly = sum(c * y ** i for i, c in enumerate(r_coeffs))
    exact = exact_delta(knot.k, knot.n, minpoly)

    root = tl.parabolic_roots(knot)[0]
    lo, numeric, residual = tl.adjoint_polynomial(knot, root.y)
    assert len(exact) == len(numeric)
    y0 = complex(root.y)
    for ce, cn in zip(exact, numeric):
        assert abs(complex(sp.N(ce.subs(y, y0))) - cn) < 1e-9
