"""Bounded (rectangle) identities, checked by exact evaluation at random points.

Every quantity is a rational number computed with :class:`fractions.Fraction`.
A vanishing denominator anywhere raises :class:`SingularPointError`, and the
sampler draws a fresh point.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from ..errors import SamplingError, SingularPointError, UsageError
from ..exact import as_rational
from ..partitions import Partition, is_conj_even, partitions_in_box
from ..symfunc import schur_eval
from ..weights import beta, f_ab, neg_count, tag_values
from .report import FAIL, PASS, CheckReport, make_params

RETRY_BUDGET = 200
POINT_IDS = ("thm5", "cor1a", "cor1b", "cor1c", "m_to_inf")


def _recip(v) -> Fraction:
    v = as_rational(v)
    if v == 0:
        raise SingularPointError("vanishing denominator")
    return Fraction(1) / v


def signed_point(xi: Sequence[int], x: Sequence) -> list[Fraction]:
    """``X^xi``: coordinates with ``xi_i = -1`` inverted."""
    return [as_rational(v) if s == 1 else _recip(v) for s, v in zip(xi, x)]


def phi_eval(x: Sequence, a, b) -> Fraction:
    """``prod_i 1/((1 - a x_i)(1 - b x_i)) * prod_{j<k} 1/(1 - x_j x_k)``."""
    a, b = as_rational(a), as_rational(b)
    xs = [as_rational(v) for v in x]
    den = Fraction(1)
    for v in xs:
        den *= (1 - a * v) * (1 - b * v)
    for j in range(len(xs)):
        for k in range(j + 1, len(xs)):
            den *= 1 - xs[j] * xs[k]
    return _recip(den)


def _weight_fn(weight: str, a, b) -> Callable[[Partition], object]:
    if weight == "f_ab":
        point = {"a": as_rational(a), "b": as_rational(b)}
        return lambda lam: f_ab(lam).eval_at(point)
    if weight == "one":
        return lambda lam: 1
    if weight == "even":
        return lambda lam: int(lam.is_even())
    if weight == "conj_even":
        return lambda lam: int(is_conj_even(lam))
    raise UsageError(f"unknown rectangle weight {weight!r}")


def rect_sum_eval(n: int, m: int, a, b, x: Sequence, weight: str = "f_ab") -> Fraction:
    """``sum_{lam in (m^n)} w(lam) s_lam(x)`` with ``s_lam`` from the bialternant."""
    if len(x) != n:
        raise UsageError(f"point has {len(x)} coordinates, expected {n}")
    w = _weight_fn(weight, a, b)
    total = Fraction(0)
    for lam in partitions_in_box(m, n):
        c = w(lam)
        if c:
            total += c * schur_eval(lam, x)
    return as_rational(total)


def _xpower(xi: Sequence[int], x: Sequence, m: int, scale: int = 1) -> Fraction:
    # prod_i x_i^(scale * m * (1 - xi_i) / 2)
    out = Fraction(1)
    for s, v in zip(xi, x):
        if s == -1:
            out *= as_rational(v) ** (scale * m)
    return out


def sign_vectors(n: int):
    return product((1, -1), repeat=n)


def rhs_theorem5_eval(n: int, m: int, a, b, x: Sequence, tag: str = "generic") -> Fraction:
    """``sum_xi beta(xi) Phi(X^xi; a, b) prod_i x_i^(m(1 - xi_i)/2)``.

    With a special ``tag`` the parameters come from the tag and ``beta`` uses
    its closed form.
    """
    if tag != "generic":
        a, b = tag_values(tag)
    total = Fraction(0)
    for xi in sign_vectors(n):
        coeff = beta(xi, m, a, b, x, tag)
        if coeff:
            total += coeff * phi_eval(signed_point(xi, x), a, b) * _xpower(xi, x, m)
    return as_rational(total)


def special_rhs(which: str, n: int, m: int, x: Sequence) -> Fraction:
    """The three rectangle sums as plain sign-vector sums."""
    total = Fraction(0)
    for xi in sign_vectors(n):
        if which == "a":
            total += phi_eval(signed_point(xi, x), 1, 0) * _xpower(xi, x, m)
        elif which == "b":
            total += phi_eval(signed_point(xi, x), 1, -1) * _xpower(xi, x, m, scale=2)
        elif which == "c":
            if neg_count(xi) % 2 == 0:
                total += phi_eval(signed_point(xi, x), 0, 0) * _xpower(xi, x, m)
        else:
            raise UsageError(f"unknown special case {which!r}")
    return as_rational(total)


# -- sampling -----------------------------------------------------------------------

def point_rng(seed: int, identity: str, n: int, m: int) -> random.Random:
    return random.Random(f"{seed}:{identity}:{n}:{m}")


def _small(rng: random.Random, lo: int = -7, hi: int = 7, dmax: int = 7) -> Fraction:
    while True:
        num = rng.randint(lo, hi)
        if num:
            return Fraction(num, rng.randint(1, dmax))


def _unit(rng: random.Random) -> Fraction:
    # strictly inside (0, 1)
    den = rng.randint(2, 9)
    return Fraction(rng.randint(1, den - 1), den)


def sample_params(rng: random.Random, n: int, unit: bool = False) -> tuple[Fraction, Fraction, list[Fraction]]:
    draw = (lambda: _unit(rng)) if unit else (lambda: _small(rng))
    a, b = draw(), draw()
    return a, b, [draw() for _ in range(n)]


def with_resampling(rng: random.Random, n: int, evaluate, unit: bool = False):
    """Call ``evaluate(a, b, x)`` at fresh points until one is nonsingular."""
    for _ in range(RETRY_BUDGET):
        a, b, x = sample_params(rng, n, unit)
        try:
            return (a, b, x), evaluate(a, b, x)
        except SingularPointError:
            continue
    raise SamplingError(f"no nonsingular point found in {RETRY_BUDGET} draws")


def _fmt(v) -> str:
    return str(as_rational(v))


def _point_witness(a, b, x, **sides) -> dict:
    out = {"a": _fmt(a), "b": _fmt(b), "x": [_fmt(v) for v in x]}
    out.update({k: _fmt(v) for k, v in sides.items()})
    return out


def _sides(identity: str, n: int, m: int, a, b, x) -> dict[str, Fraction]:
    if identity == "thm5":
        return {"lhs": rect_sum_eval(n, m, a, b, x, "f_ab"), "rhs": rhs_theorem5_eval(n, m, a, b, x)}
    if identity == "cor1a":
        return {
            "lhs": rect_sum_eval(n, m, 1, 0, x, "one"),
            "rhs": special_rhs("a", n, m, x),
            "rhs_beta": rhs_theorem5_eval(n, m, 1, 0, x, "1,0"),
        }
    if identity == "cor1b":
        return {
            "lhs": rect_sum_eval(n, 2 * m, 1, -1, x, "even"),
            "rhs": special_rhs("b", n, m, x),
            "rhs_beta": rhs_theorem5_eval(n, 2 * m, 1, -1, x, "1,-1"),
        }
    if identity == "cor1c":
        return {
            "lhs": rect_sum_eval(n, m, 0, 0, x, "conj_even"),
            "rhs": special_rhs("c", n, m, x),
            "rhs_beta": rhs_theorem5_eval(n, m, 0, 0, x, "0,0"),
        }
    raise UsageError(f"{identity!r} is not a point identity")


M_SEQUENCE = (2, 4, 6, 8)


def _tail_gaps(n: int, a, b, x) -> list[Fraction]:
    phi = phi_eval(x, a, b)
    return [abs(rect_sum_eval(n, m, a, b, x, "f_ab") - phi) for m in M_SEQUENCE]


def verify_point_identity(identity: str, n: int, m: int | None = None, trials: int = 20,
                          seed: int = 0) -> CheckReport:
    """Exact equality of both sides at ``trials`` random nonsingular points.

    ``m_to_inf`` instead samples ``a, b, x`` in ``(0, 1)`` and checks that the
    distance from the rectangle sum to ``Phi`` strictly decreases along
    ``m = 2, 4, 6, 8``.
    """
    if identity not in POINT_IDS:
        raise UsageError(f"{identity!r} is not a point identity")
    if n < 1:
        raise UsageError("need at least one variable")
    if trials < 0:
        raise UsageError("trials must be nonnegative")
    if identity == "cor1c" and n % 2:
        raise UsageError("cor1c needs an even number of variables")
    if identity != "m_to_inf":
        if m is None or m < 0:
            raise UsageError(f"{identity} needs m >= 0")
    params = make_params(n=n, m=None if identity == "m_to_inf" else m, trials=trials, seed=seed)
    rng = point_rng(seed, identity, n, m if m is not None else -1)
    for _ in range(trials):
        if identity == "m_to_inf":
            (a, b, x), gaps = with_resampling(rng, n, lambda a, b, x: _tail_gaps(n, a, b, x), unit=True)
            if not all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:])):
                witness = _point_witness(a, b, x)
                witness["gaps"] = {str(mm): _fmt(g) for mm, g in zip(M_SEQUENCE, gaps)}
                return CheckReport(identity, params, FAIL, witness)
            continue
        (a, b, x), sides = with_resampling(rng, n, lambda a, b, x: _sides(identity, n, m, a, b, x))
        if len(set(sides.values())) != 1:
            return CheckReport(identity, params, FAIL, _point_witness(a, b, x, **sides))
    return CheckReport(identity, params, PASS)
