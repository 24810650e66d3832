"""Exact determinants of polynomial and rational matrices."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import UsageError
from .poly import MultiPoly, as_rational

Matrix = Sequence[Sequence[MultiPoly]]


def _square(M) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise UsageError("determinant of a non-square matrix")
    return n


def _context(M):
    for row in M:
        for e in row:
            if isinstance(e, MultiPoly):
                return e.ctx
    return None


def _normalize(M, ctx):
    rows = []
    for row in M:
        out = []
        for e in row:
            if isinstance(e, MultiPoly):
                if e.ctx != ctx:
                    raise UsageError("matrix entries live in different contexts")
                out.append(e)
            else:
                out.append(ctx.const(e))
        rows.append(out)
    return rows


def det_cofactor(M: Matrix, ctx=None) -> MultiPoly:
    """Laplace expansion along rows, memoised on the set of remaining columns."""
    n = _square(M)
    ctx = ctx or _context(M)
    if ctx is None:
        raise UsageError("cannot infer a context for a constant matrix")
    if n == 0:
        return ctx.one
    A = _normalize(M, ctx)
    memo: dict[int, MultiPoly] = {}

    def minor(row: int, cols: int) -> MultiPoly:
        # determinant of rows row..n-1 restricted to the columns in bitmask ``cols``
        if row == n:
            return ctx.one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = ctx.zero
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            e = A[row][j]
            if e:
                sub = minor(row + 1, cols & ~(1 << j))
                if sub:
                    prod = e * sub
                    total = total + prod if sign > 0 else total - prod
            sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


def det_bareiss(M: Matrix, ctx=None) -> MultiPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = _square(M)
    ctx = ctx or _context(M)
    if ctx is None:
        raise UsageError("cannot infer a context for a constant matrix")
    if n == 0:
        return ctx.one
    A = [list(r) for r in _normalize(M, ctx)]
    sign = 1
    prev = ctx.one
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return ctx.zero
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * A[i][j] - A[i][k] * A[k][j]
                A[i][j] = num.exact_div(prev) if prev != 1 else num
        prev = piv
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def det_exact(M: Matrix, ctx=None, method: str = "auto") -> MultiPoly:
    """Determinant over the exact polynomial ring.

    ``method`` is ``"cofactor"``, ``"bareiss"`` or ``"auto"`` (cofactor below
    6x6, Bareiss from there on). Both routes return identical polynomials.
    """
    n = _square(M)
    if method == "auto":
        method = "cofactor" if n < 6 else "bareiss"
    if method == "cofactor":
        return det_cofactor(M, ctx)
    if method == "bareiss":
        return det_bareiss(M, ctx)
    raise UsageError(f"unknown determinant method {method!r}")


def det_rational(M) -> Fraction | int:
    """Determinant of a matrix of exact rationals by Gaussian elimination."""
    n = _square(M)
    A = [[Fraction(as_rational(e)) for e in row] for row in M]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        p = A[k][k]
        det *= p
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                row_k, row_i = A[k], A[i]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return as_rational(det)
