"""Determinant identities, checked as polynomial identities over the integers.

Rational right sides are multiplied through by their denominators, so each
check compares two honest polynomials in ``x1..xn``.
"""
from __future__ import annotations

from itertools import permutations, product

from ..errors import UsageError
from ..exact import MultiPoly, VarContext, det_exact
from ..partitions import partitions_in_box
from ..symfunc import elementary_e, schur
from .report import FAIL, PASS, CheckReport, make_params
from .series_ids import first_difference

DET_IDS = ("thm2", "thm3", "thm4", "cor2a", "cor2b", "cor2c", "eq13", "eq14", "remark1")


def _xs(n: int) -> tuple[VarContext, list[MultiPoly]]:
    ctx = VarContext.create(n)
    return ctx, [ctx.var(f"x{i}") for i in range(1, n + 1)]


def alternant(n: int, top: int, sign: int) -> MultiPoly:
    """``det(x_i^(j-1) + sign * x_i^(top - j))`` for ``1 <= i, j <= n``."""
    ctx, xs = _xs(n)
    M = [[x ** (j - 1) + x ** (top - j) * sign for j in range(1, n + 1)] for x in xs]
    return det_exact(M, ctx)


def pair_product(n: int, flipped: bool = False) -> MultiPoly:
    """``prod_{i<j} (x_i - x_j)(x_i x_j - 1)``; with ``flipped`` the second
    factor is ``1 - x_i x_j``."""
    ctx, xs = _xs(n)
    out = ctx.one
    for i in range(n):
        for j in range(i + 1, n):
            second = 1 - xs[i] * xs[j] if flipped else xs[i] * xs[j] - 1
            out = out * (xs[i] - xs[j]) * second
    return out


def linear_product(n: int, power: int) -> MultiPoly:
    """``prod_i (1 - x_i^power)``."""
    ctx, xs = _xs(n)
    out = ctx.one
    for x in xs:
        out = out * (1 - x ** power)
    return out


def rect_schur_sum(n: int, m: int, parity: str = "any") -> MultiPoly:
    ctx = VarContext.create(n)
    total = ctx.zero
    for lam in partitions_in_box(m, n, parity):
        total = total + schur(lam, n, ctx)
    return total


def leibniz_power_sum(n: int, shift: int) -> MultiPoly:
    """``sum_sigma sgn(sigma) prod_i x_{sigma(i)}^(i - 1 + shift)``."""
    ctx, xs = _xs(n)
    total = ctx.zero
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ctx.one
        for i, p in enumerate(perm):
            term = term * xs[p] ** (i + shift)
        total = total - term if inv % 2 else total + term
    return total


def vandermonde(n: int, descending: bool = True) -> MultiPoly:
    """``prod_{i<j} (x_i - x_j)``, or ``prod_{i<j} (x_j - x_i)`` when not descending."""
    ctx, xs = _xs(n)
    out = ctx.one
    for i in range(n):
        for j in range(i + 1, n):
            out = out * ((xs[i] - xs[j]) if descending else (xs[j] - xs[i]))
    return out


def _cleared_pair(xi_i: int, xi_j: int, xi: MultiPoly, xj: MultiPoly) -> MultiPoly:
    # (x_i^s - x_j^t)(1 - x_i^s x_j^t) multiplied by x_i^(1-s) x_j^(1-t)
    up_i, dn_i = (xi, 1) if xi_i == 1 else (1, xi)
    up_j, dn_j = (xj, 1) if xi_j == 1 else (1, xj)
    first = up_i * dn_j - dn_i * up_j
    second = dn_i * dn_j - up_i * up_j
    return first * second


def signed_pair_identity(xi: tuple[int, ...]) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the product identity for ``X^xi`` with ``x``-powers cleared.

    The left side is ``prod_{i<j} (x_i^xi_i - x_j^xi_j)(1 - x_i^xi_i x_j^xi_j)``
    times ``prod_i x_i^((n-1)(1 - xi_i))``; the right side is
    ``prod_{i<j} (x_i - x_j)(1 - x_i x_j)``.
    """
    n = len(xi)
    ctx, xs = _xs(n)
    lhs = ctx.one
    for i in range(n):
        for j in range(i + 1, n):
            a, b = xs[i], xs[j]
            lhs = lhs * _cleared_pair(xi[i], xi[j], a, b)
    return lhs, pair_product(n, flipped=True)


def det_sides(identity: str, n: int, m: int = 0) -> list[tuple[MultiPoly, MultiPoly]]:
    """The polynomial pairs that must agree for ``identity``."""
    if n < 1:
        raise UsageError("need at least one variable")
    if m < 0:
        raise UsageError("m must be nonnegative")
    if identity in ("thm4",) and n % 2:
        raise UsageError(f"{identity} needs an even number of variables")
    if identity == "thm2":
        return [(alternant(n, m + 2 * n, -1), rect_schur_sum(n, m) * linear_product(n, 1) * pair_product(n))]
    if identity == "thm3":
        return [(alternant(n, 2 * m + 2 * n + 1, -1),
                 rect_schur_sum(n, 2 * m, "even") * linear_product(n, 2) * pair_product(n))]
    if identity == "thm4":
        top = m + 2 * n - 1
        return [(alternant(n, top, -1) + alternant(n, top, 1),
                 rect_schur_sum(n, m, "conj_even") * pair_product(n) * 2)]
    if identity == "cor2a":
        return [(alternant(n, 2 * n, -1), linear_product(n, 1) * pair_product(n))]
    if identity == "cor2b":
        return [(alternant(n, 2 * n + 1, -1), linear_product(n, 2) * pair_product(n))]
    if identity == "cor2c":
        return [(alternant(n, 2 * n - 1, 1), pair_product(n) * 2)]
    if identity == "eq13":
        ctx, xs = _xs(n)
        vdm = det_exact([[x ** i for x in xs] for i in range(n)], ctx)
        return [(leibniz_power_sum(n, 0), vdm), (vdm, vandermonde(n, descending=False))]
    if identity == "eq14":
        return [signed_pair_identity(xi) for xi in product((1, -1), repeat=n)]
    if identity == "remark1":
        ctx = VarContext.create(n)
        esum = ctx.zero
        for k in range(n + 1):
            esum = esum + elementary_e(k, n, ctx)
        return [(esum * rect_schur_sum(n, 2 * m, "even"), rect_schur_sum(n, 2 * m + 1)),
                (esum, _one_plus(n))]
    raise UsageError(f"{identity!r} is not a determinant identity")


def _one_plus(n: int) -> MultiPoly:
    ctx, xs = _xs(n)
    out = ctx.one
    for x in xs:
        out = out * (1 + x)
    return out


def verify_det_identity(identity: str, n: int, m: int = 0) -> CheckReport:
    """Exact polynomial comparison; the witness names the first differing monomial."""
    if identity not in DET_IDS:
        raise UsageError(f"{identity!r} is not a determinant identity")
    uses_m = identity in ("thm2", "thm3", "thm4", "remark1")
    params = make_params(n=n, m=m if uses_m else None)
    for k, (lhs, rhs) in enumerate(det_sides(identity, n, m)):
        witness = first_difference(lhs, rhs)
        if witness is not None:
            witness["part"] = k
            return CheckReport(identity, params, FAIL, witness)
    return CheckReport(identity, params, PASS)
