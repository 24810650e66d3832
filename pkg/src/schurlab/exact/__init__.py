"""Exact rational arithmetic: polynomials, truncated series, determinants."""
from .det import det_bareiss, det_cofactor, det_exact, det_rational
from .kernel import BACKEND
from .poly import Coeff, MultiPoly, VarContext, as_rational, render
from .series import TruncatedSeries, expand_inverse_linear, series_mul, series_product


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """``p op q`` for ``op`` in ``{"add", "sub", "mul"}``."""
    from ..errors import UsageError

    p._check(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise UsageError(f"unknown operation {op!r}")


def eval_at(p: MultiPoly, point) -> Coeff:
    return p.eval_at(point)


__all__ = [
    "BACKEND",
    "Coeff",
    "MultiPoly",
    "TruncatedSeries",
    "VarContext",
    "as_rational",
    "det_bareiss",
    "det_cofactor",
    "det_exact",
    "det_rational",
    "eval_at",
    "expand_inverse_linear",
    "poly_arith",
    "render",
    "series_mul",
    "series_product",
]
