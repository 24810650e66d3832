"""Formal power series truncated by total degree in the series variables."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..errors import UsageError
from .poly import MultiPoly, VarContext


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """A series known exactly up to series-degree ``cap``.

    Parameter variables are never truncated, so coefficients of each
    x-monomial are polynomials in the parameters.
    """

    body: MultiPoly
    cap: int

    def __post_init__(self):
        if self.cap < 0:
            raise UsageError("truncation cap must be nonnegative")
        if self.body.series_degree() > self.cap:
            object.__setattr__(self, "body", self.body.truncate(self.cap))

    @classmethod
    def one(cls, ctx: VarContext, cap: int) -> "TruncatedSeries":
        return cls(ctx.one, cap)

    @property
    def ctx(self) -> VarContext:
        return self.body.ctx

    def _check(self, other: "TruncatedSeries") -> None:
        if self.cap != other.cap:
            raise UsageError(f"truncation caps differ: {self.cap} vs {other.cap}")
        if self.ctx != other.ctx:
            raise UsageError("series contexts differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.body + other.body, self.cap)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.body - other.body, self.cap)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, MultiPoly):
            return series_mul(self, TruncatedSeries(other, self.cap))
        return TruncatedSeries(self.body.scale(other), self.cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.body == other.body

    __hash__ = None

    def __str__(self) -> str:
        return f"{self.body} + O(deg {self.cap + 1})"


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Product of two truncated series at their common cap."""
    s._check(t)
    return TruncatedSeries(s.body.mul(t.body, cap=s.cap), s.cap)


def series_product(factors, ctx: VarContext, cap: int) -> TruncatedSeries:
    out = TruncatedSeries.one(ctx, cap)
    for f in factors:
        out = out * f
    return out


def expand_inverse_linear(coeff: MultiPoly, xmono: Mapping[str, int] | MultiPoly, cap: int) -> TruncatedSeries:
    """Expansion of ``(1 - coeff * x^alpha)^(-1)`` as a geometric series up to ``cap``.

    ``coeff`` is any polynomial free of series variables (typically a
    monomial such as ``a`` or ``a*b``); ``xmono`` is the monomial ``x^alpha``
    given as a name->exponent mapping or as a monomial polynomial.
    """
    ctx = coeff.ctx
    if isinstance(xmono, MultiPoly):
        if len(xmono) != 1:
            raise UsageError("xmono must be a single monomial")
        ((exps, c),) = xmono.terms()
        if c != 1:
            raise UsageError("xmono must have coefficient 1")
        mono = xmono
    else:
        mono = ctx.monomial(1, dict(xmono))
        ((exps, _),) = mono.terms()
    if any(e and v not in ctx.series for v, e in zip(ctx.names, exps)):
        raise UsageError("xmono may only involve series variables")
    step = mono.series_degree()
    if step <= 0:
        raise UsageError("factor (1 - c*x^alpha)^-1 needs positive series degree to converge")
    if coeff.series_degree() > 0:
        raise UsageError("coefficient must not involve series variables")
    term = coeff * mono
    out = ctx.one
    power = ctx.one
    for _ in range(cap // step):
        power = power * term
        out = out + power
    return TruncatedSeries(out, cap)
