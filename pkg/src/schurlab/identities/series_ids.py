"""Schur-function series identities, checked coefficientwise to a degree cap.

Both sides live in one context: ``x1..xn`` as series variables followed by
whichever of ``a, b, c`` the identity uses. The left side is a finite sum
because ``s_lam`` is homogeneous of degree ``|lam|``.
"""
from __future__ import annotations

from typing import Callable

from ..errors import UsageError
from ..exact import MultiPoly, TruncatedSeries, VarContext, expand_inverse_linear, render, series_product
from ..partitions import Partition, enumerate_partitions, is_conj_even, odd_col_count, odd_row_count
from ..symfunc import schur
from ..weights import f_ab, f_abc, f_conj_ab, f_conj_abc
from .report import FAIL, PASS, CheckReport, make_params

Weight = Callable[[Partition, VarContext], MultiPoly]


def series_context(n: int, params: str = "") -> VarContext:
    if n < 1:
        raise UsageError("need at least one variable")
    return VarContext.create(n, tuple(params))


def _inv(ctx: VarContext, coeff: MultiPoly, exps: dict[str, int], cap: int) -> TruncatedSeries:
    return expand_inverse_linear(coeff, exps, cap)


def pair_factors(ctx: VarContext, cap: int) -> list[TruncatedSeries]:
    """``(1 - x_j x_k)^(-1)`` for ``j < k``."""
    xs = ctx.series_names
    one = ctx.one
    return [_inv(ctx, one, {xs[j]: 1, xs[k]: 1}, cap) for j in range(len(xs)) for k in range(j + 1, len(xs))]


def linear_factors(ctx: VarContext, param: str | None, cap: int) -> list[TruncatedSeries]:
    """``(1 - t x_i)^(-1)`` with ``t`` a parameter, or ``t = 1`` when ``param`` is None."""
    coeff = ctx.one if param is None else ctx.var(param)
    return [_inv(ctx, coeff, {x: 1}, cap) for x in ctx.series_names]


def phi_truncated(n: int, D: int, factors: str = "ab", ctx: VarContext | None = None) -> TruncatedSeries:
    """``Phi(X; a, b)`` (times ``prod (1 - c x_i)^(-1)`` for ``"abc"``) to degree ``D``."""
    if factors not in ("ab", "abc"):
        raise UsageError(f"unknown factor set {factors!r}")
    if D < 0:
        raise UsageError("degree cap must be nonnegative")
    ctx = ctx or series_context(n, factors)
    parts = []
    for p in factors:
        parts += linear_factors(ctx, p, D)
    return series_product(parts + pair_factors(ctx, D), ctx, D)


# -- left sides ---------------------------------------------------------------------

def _indicator(pred) -> Weight:
    return lambda lam, ctx: ctx.one if pred(lam) else ctx.zero


def _embedded(fn) -> Weight:
    return lambda lam, ctx: fn(lam).embed(ctx)


WEIGHTS: dict[str, Weight] = {
    "one": _indicator(lambda lam: True),
    "even": _indicator(Partition.is_even),
    "conj_even": _indicator(is_conj_even),
    "a^c": lambda lam, ctx: ctx.var("a") ** odd_col_count(lam),
    "a^r": lambda lam, ctx: ctx.var("a") ** odd_row_count(lam),
    "f_ab": _embedded(f_ab),
    "f_abc": _embedded(f_abc),
    "f_ab_conj": _embedded(f_conj_ab),
    "f_abc_conj": _embedded(f_conj_abc),
}


def lhs_series(weight: str | Weight, n: int, D: int, ctx: VarContext | None = None,
               params: str = "abc") -> TruncatedSeries:
    """``sum_{|lam| <= D, l(lam) <= n} w(lam) s_lam(x1..xn)``."""
    w = WEIGHTS[weight] if isinstance(weight, str) else weight
    ctx = ctx or series_context(n, params)
    total = ctx.zero
    for lam in enumerate_partitions(max_size=D, max_length=n):
        coeff = w(lam, ctx)
        if coeff:
            total = total + coeff * schur(lam, n, ctx)
    return TruncatedSeries(total, D)


# -- right sides --------------------------------------------------------------------

def _numerators(ctx: VarContext, params: str, D: int) -> list[TruncatedSeries]:
    # prod_i (1 + t x_i) for each parameter t
    out = []
    for p in params:
        t = ctx.var(p)
        out += [TruncatedSeries(ctx.one + t * ctx.var(x), D) for x in ctx.series_names]
    return out


def _squares(ctx: VarContext, D: int) -> list[TruncatedSeries]:
    return [_inv(ctx, ctx.one, {x: 2}, D) for x in ctx.series_names]


def rhs_series(identity: str, ctx: VarContext, D: int) -> TruncatedSeries:
    pairs = pair_factors(ctx, D)
    if identity == "littlewood1":
        parts = linear_factors(ctx, "a", D)
    elif identity == "iw2":
        parts = linear_factors(ctx, "a", D) + linear_factors(ctx, "b", D)
    elif identity == "thm1":
        parts = linear_factors(ctx, "a", D) + linear_factors(ctx, "b", D) + linear_factors(ctx, "c", D)
    elif identity == "eq3":
        parts = linear_factors(ctx, None, D)
    elif identity == "eq4":
        parts = _squares(ctx, D)
    elif identity == "eq5":
        parts = []
    elif identity == "littlewood2":
        parts = _numerators(ctx, "a", D) + _squares(ctx, D)
    elif identity == "remark3a":
        parts = _numerators(ctx, "ab", D) + _squares(ctx, D)
    elif identity == "remark3b":
        parts = _numerators(ctx, "abc", D) + _squares(ctx, D)
    else:
        raise UsageError(f"{identity!r} is not a series identity")
    return series_product(parts + pairs, ctx, D)


SERIES_SPECS: dict[str, tuple[str, str]] = {
    # id: (left-side weight, parameters)
    "littlewood1": ("a^c", "a"),
    "iw2": ("f_ab", "ab"),
    "eq3": ("one", ""),
    "eq4": ("even", ""),
    "eq5": ("conj_even", ""),
    "thm1": ("f_abc", "abc"),
    "littlewood2": ("a^r", "a"),
    "remark3a": ("f_ab_conj", "ab"),
    "remark3b": ("f_abc_conj", "abc"),
}


def first_difference(lhs: MultiPoly, rhs: MultiPoly) -> dict | None:
    """Lowest-degree x-monomial whose coefficients differ, with both coefficients."""
    diff = lhs - rhs
    if not diff:
        return None
    ctx = diff.ctx
    sidx = [i for i, v in enumerate(ctx.names) if v in ctx.series]
    xparts = {tuple(e[i] for i in sidx) for e, _ in diff.terms()}
    worst = min(xparts, key=lambda e: (sum(e), tuple(-v for v in e)))

    def coeff_of(p: MultiPoly) -> str:
        sub = {}
        for e, c in p.terms():
            if tuple(e[i] for i in sidx) == worst:
                sub[tuple(0 if i in sidx else v for i, v in enumerate(e))] = c
        return render(MultiPoly.from_dict(ctx, sub))

    names = [ctx.names[i] for i in sidx]
    mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(names, worst) if e) or "1"
    return {"monomial": mono, "lhs": coeff_of(lhs), "rhs": coeff_of(rhs)}


def verify_series_identity(identity: str, n: int, D: int, weight: Weight | None = None,
                           seed: int | None = None) -> CheckReport:
    """Compare both sides monomial by monomial up to degree ``D``.

    ``weight`` replaces the left-side weight (used to exercise the harness).
    """
    if identity not in SERIES_SPECS:
        raise UsageError(f"{identity!r} is not a series identity")
    if D < 0:
        raise UsageError("degree cap must be nonnegative")
    wname, params = SERIES_SPECS[identity]
    ctx = series_context(n, params)
    lhs = lhs_series(weight or wname, n, D, ctx)
    rhs = rhs_series(identity, ctx, D)
    witness = first_difference(lhs.body, rhs.body)
    return CheckReport(identity, make_params(n=n, D=D, seed=seed), FAIL if witness else PASS, witness)
