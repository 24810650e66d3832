"""Complete, elementary and Schur polynomials.

``schur`` expands through the Jacobi-Trudi determinant over the exact ring.
Two independent routes serve as oracles: ``schur_ssyt`` enumerates
semistandard tableaux and ``schur_eval`` evaluates the ratio of alternants
at a rational point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from .errors import SingularPointError, UsageError
from .exact import MultiPoly, VarContext, as_rational, det_cofactor, det_rational
from .partitions import Partition, as_partition


def xcontext(n: int) -> VarContext:
    return VarContext.create(n)


def _variables(n: int | None, ctx: VarContext | None, variables: Sequence[str] | None):
    if variables is None:
        if n is None:
            raise UsageError("give either n or explicit variable names")
        variables = [f"x{i}" for i in range(1, n + 1)]
    if ctx is None:
        ctx = VarContext(tuple(variables), frozenset(v for v in variables if v.startswith("x")))
    return ctx, tuple(variables)


@lru_cache(maxsize=None)
def _h(r: int, ctx: VarContext, variables: tuple[str, ...]) -> MultiPoly:
    if r < 0:
        return ctx.zero
    idx = [ctx.index(v) for v in variables]
    terms = {}
    for combo in combinations_with_replacement(idx, r):
        vec = [0] * ctx.nvars
        for i in combo:
            vec[i] += 1
        terms[tuple(vec)] = 1
    return MultiPoly.from_dict(ctx, terms)


@lru_cache(maxsize=None)
def _e(r: int, ctx: VarContext, variables: tuple[str, ...]) -> MultiPoly:
    if r < 0 or r > len(variables):
        return ctx.zero
    idx = [ctx.index(v) for v in variables]
    terms = {}
    for combo in combinations(idx, r):
        vec = [0] * ctx.nvars
        for i in combo:
            vec[i] = 1
        terms[tuple(vec)] = 1
    return MultiPoly.from_dict(ctx, terms)


def complete_h(r: int, n: int | None = None, ctx: VarContext | None = None,
               variables: Sequence[str] | None = None) -> MultiPoly:
    """Sum of all degree-``r`` monomials; zero for negative ``r``.

    The variables are ``x1..xn`` unless ``variables`` names others, e.g.
    ``complete_h(1, variables="abc")``.
    """
    ctx, variables = _variables(n, ctx, variables)
    return _h(r, ctx, variables)


def elementary_e(r: int, n: int | None = None, ctx: VarContext | None = None,
                 variables: Sequence[str] | None = None) -> MultiPoly:
    ctx, variables = _variables(n, ctx, variables)
    return _e(r, ctx, variables)


@lru_cache(maxsize=None)
def _schur(lam: Partition, n: int, ctx: VarContext) -> MultiPoly:
    if len(lam) > n:
        return ctx.zero
    if not lam:
        return ctx.one
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    l = len(lam)
    M = [[_h(lam[i] - i + j, ctx, xs) for j in range(l)] for i in range(l)]
    return det_cofactor(M, ctx)


def schur(lam, n: int, ctx: VarContext | None = None) -> MultiPoly:
    """Schur polynomial ``s_lam(x1..xn)`` via ``det(h_{lam_i - i + j})``."""
    if n < 1:
        raise UsageError("need at least one variable")
    return _schur(as_partition(lam), n, ctx or xcontext(n))


def ssyt(lam, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..n``, as rows."""
    lam = as_partition(lam)
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(filling[(r, c)] for c in range(length)) for r, length in enumerate(lam))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        # rows below still need room for strictly increasing columns
        hi = n - (sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c))
        for v in range(lo, hi + 1):
            filling[(r, c)] = v
            yield from rec(k + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def schur_ssyt(lam, n: int, ctx: VarContext | None = None) -> MultiPoly:
    """Schur polynomial as the content generating function of tableaux."""
    ctx = ctx or xcontext(n)
    idx = [ctx.index(f"x{i}") for i in range(1, n + 1)]
    terms: dict[tuple[int, ...], int] = {}
    for t in ssyt(lam, n):
        vec = [0] * ctx.nvars
        for row in t:
            for v in row:
                vec[idx[v - 1]] += 1
        key = tuple(vec)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly.from_dict(ctx, terms)


def schur_eval(lam, point: Sequence) -> int | Fraction:
    """Exact ``det(x_i^(lam_j + n - j)) / det(x_i^(n - j))`` at ``point``."""
    lam = as_partition(lam)
    xs = [as_rational(v) for v in point]
    n = len(xs)
    if n < 1:
        raise UsageError("need at least one coordinate")
    if len(set(xs)) != n:
        raise SingularPointError("repeated coordinates make the alternant vanish")
    if len(lam) > n:
        return 0
    parts = [lam.part(j) for j in range(1, n + 1)]
    num = det_rational([[x ** (parts[j] + n - 1 - j) for j in range(n)] for x in xs])
    den = det_rational([[x ** (n - 1 - j) for j in range(n)] for x in xs])
    if den == 0:
        raise SingularPointError("Vandermonde determinant vanishes")
    return as_rational(Fraction(num) / den)


def pieri_expand(mu, k: int, n: int) -> list[Partition]:
    """All ``lam`` of length at most ``n`` with ``lam/mu`` a horizontal ``k``-strip."""
    mu = as_partition(mu)
    if k < 0 or len(mu) > n:
        return []
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]):
        # row i (0-based) may grow up to mu_{i-1} (unbounded for the first row)
        if i == n:
            if left == 0:
                out.append(Partition(acc))
            return
        base = mu.part(i + 1)
        room = left if i == 0 else min(left, mu.part(i) - base)
        for t in range(room, -1, -1):
            acc.append(base + t)
            rec(i + 1, left - t, acc)
            acc.pop()

    rec(0, k, [])
    return out
