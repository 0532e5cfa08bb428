"""Adjoint twisted Alexander polynomials of double twist knots J(k,2n).

Computes the parabolic Riley polynomial, its roots, and the adjoint twisted
Alexander polynomial at every verified root, checking that the degree equals
3(2g-1) and that monicity coincides with fiberedness; non-monicity for
non-fibered knots is also certified in exact integer arithmetic.
"""

from ._torsionlab import (
    Knot,
    KnotFacts,
    MonicityObstruction,
    NonHyperbolicError,
    ParabolicRoot,
    RileyData,
    TorsionError,
    TorsionReport,
    adjoint_polynomial,
    build_riley,
    certify,
    cheb_eval,
    cheb_poly,
    classify,
    obstruction_applicable,
    parabolic_roots,
    parse_knot,
    scan_json,
    verify,
)

__all__ = [
    "Knot",
    "KnotFacts",
    "MonicityObstruction",
    "NonHyperbolicError",
    "ParabolicRoot",
    "RileyData",
    "TorsionError",
    "TorsionReport",
    "adjoint_polynomial",
    "build_riley",
    "certify",
    "cheb_eval",
    "cheb_poly",
    "classify",
    "obstruction_applicable",
    "parabolic_roots",
    "parse_knot",
    "scan_json",
    "verify",
]
