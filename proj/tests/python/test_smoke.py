import json
import math

import pytest

import torsionlab as tl


def test_parse_and_classify():
    knot = tl.parse_knot("J(2,-2)")
    assert (knot.k, knot.n) == (2, -1)
    assert knot.name() == "J(2,-2)"
    facts = tl.classify(knot)
    assert facts.genus == 1
    assert facts.fibered
    assert facts.hyperbolic

    with pytest.raises(ValueError):
        tl.parse_knot("J(0,2)")


def test_chebyshev():
    assert tl.cheb_poly(3) == [0, -2, 0, 1]
    assert tl.cheb_poly(-2) == [-1]
    assert abs(tl.cheb_eval(5, 2.0) - 6.0) < 1e-12


def test_riley_polynomial_and_roots():
    knot = tl.parse_knot("J(2,-2)")
    data = tl.build_riley(knot)
    assert data.riley == [3, -3, 1]
    roots = tl.parabolic_roots(knot)
    assert len(roots) == 2
    want = complex(1.5, math.sqrt(3) / 2)
    assert min(abs(r.y - want) for r in roots) < 1e-12
    assert all(r.nonreal and r.nondegenerate for r in roots)


def test_verify_figure_eight():
    reports = tl.verify(tl.parse_knot("J(2,-2)"))
    assert len(reports) == 2
    for r in reports:
        assert r.ok()
        assert r.degree_span == 3
        assert r.monic
        assert r.division_residual < 1e-8


def test_verify_rejects_non_hyperbolic():
    with pytest.raises(tl.NonHyperbolicError):
        tl.verify(tl.parse_knot("J(1,4)"))


def test_certify_non_fibered():
    ob = tl.certify(tl.parse_knot("J(4,2)"))
    assert ob.valid
    assert ob.q == 2
    assert ob.P == [0, 0, 1]  # y^2
    payload = json.loads(ob.to_json())
    assert payload["certificates"][0]["Q"] == ["1", "0", "2"]

    assert not tl.obstruction_applicable(tl.parse_knot("J(3,2)"))


def test_adjoint_polynomial_direct():
    knot = tl.parse_knot("J(2,-2)")
    y = tl.parabolic_roots(knot)[0].y
    lo, coeffs, residual = tl.adjoint_polynomial(knot, y)
    assert len(coeffs) - 1 == 3
    assert residual < 1e-10


def test_scan_json():
    payload = json.loads(tl.scan_json(2, 4, -2, 2, jobs=2))
    assert payload["schema_version"] == 1
    assert payload["summary"]["mismatches"] == 0
    assert payload["summary"]["errors"] == 0
    assert payload["summary"]["verified"] > 0
