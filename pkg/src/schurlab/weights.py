"""Weight polynomials attached to partitions and the bounded-sum coefficients.

Every quotient of the form ``(a^(k+1) - b^(k+1)) / (a - b)`` or
``(1 - (ab)^(k+1)) / (1 - ab)`` is built directly as its geometric sum, so
nothing here divides polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SingularPointError, UsageError
from .exact import MultiPoly, VarContext, as_rational
from .partitions import Partition, as_partition, column_profile, conjugate, odd_col_count
from .strips import delta_profile, enumerate_B, subsets, triple_weight

AB = VarContext(("a", "b"))
ABC = VarContext(("a", "b", "c"))

SPECIAL_TAGS = ("1,0", "1,-1", "0,0")


def _geom(k: int, u: MultiPoly, v: MultiPoly) -> MultiPoly:
    """``sum_{r=0}^{k} u^(k-r) v^r`` (complete homogeneous ``h_k(u, v)``)."""
    ctx = u.ctx
    if k < 0:
        return ctx.zero
    total = ctx.zero
    for r in range(k + 1):
        total = total + u ** (k - r) * v ** r
    return total


def _geom1(k: int, t: MultiPoly) -> MultiPoly:
    """``1 + t + ... + t^k``."""
    return _geom(k, t.ctx.one, t)


def f_ab(lam, ctx: VarContext = AB) -> MultiPoly:
    """Product over column lengths ``j``: ``h_{c_j}(a, b)`` for odd ``j``,
    ``1 + ab + ... + (ab)^{c_j}`` for even ``j``."""
    return _f_ab(as_partition(lam), ctx)


@lru_cache(maxsize=None)
def _f_ab(lam: Partition, ctx: VarContext) -> MultiPoly:
    a, b = ctx.var("a"), ctx.var("b")
    out = ctx.one
    for j, c in enumerate(column_profile(lam), 1):
        if c:
            out = out * (_geom(c, a, b) if j % 2 else _geom1(c, a * b))
    return out


def f_ab_oracle(lam, ctx: VarContext = AB) -> MultiPoly:
    """Sum over horizontal strips: ``b^|lam/mu| a^c(mu)``."""
    from .strips import horizontal_strips

    lam = as_partition(lam)
    total = ctx.zero
    for mu in horizontal_strips(lam):
        total = total + ctx.monomial(1, a=odd_col_count(mu), b=lam.size - mu.size)
    return total


@lru_cache(maxsize=None)
def P_poly(r: int, ctx: VarContext = ABC) -> MultiPoly:
    if r < 0:
        return ctx.zero
    a, b, c = ctx.vars("a", "b", "c")
    total = ctx.zero
    for k in range(r + 1):
        total = total + _geom(k, a, b) * _geom1(r - k, a * b) * c ** k
    return total


def _h_abc(r: int, ctx: VarContext) -> MultiPoly:
    if r < 0:
        return ctx.zero
    a, b, c = ctx.vars("a", "b", "c")
    total = ctx.zero
    for i in range(r + 1):
        total = total + a ** i * _geom(r - i, b, c)
    return total


@lru_cache(maxsize=None)
def Q_poly(r: int, ctx: VarContext = ABC) -> MultiPoly:
    if r < 0:
        return ctx.zero
    abc = ctx.var("a") * ctx.var("b") * ctx.var("c")
    total = ctx.zero
    for k in range(r + 1):
        total = total + _h_abc(r - k, ctx) * abc ** k
    return total


def F_xi(xi: Sequence[int], ctx: VarContext = ABC) -> MultiPoly:
    """``h_{xi_1} * prod_k P_{xi_2k} Q_{xi_2k+1}``; zero if any entry is negative."""
    return _F_xi(tuple(xi), ctx)


@lru_cache(maxsize=None)
def _F_xi(xi: tuple[int, ...], ctx: VarContext) -> MultiPoly:
    if any(v < 0 for v in xi):
        return ctx.zero
    out = _h_abc(xi[0], ctx) if xi else ctx.one
    for pos, v in enumerate(xi[1:], 2):
        if v:
            out = out * (P_poly(v, ctx) if pos % 2 == 0 else Q_poly(v, ctx))
    return out


def f_abc(lam, ctx: VarContext = ABC, skip: Iterable[int] | None = None) -> MultiPoly:
    """Alternating sum of ``(-abc)^k F`` over ``delta``-shifts of the column profile,
    indices ``1 <= i_1 < ... < i_k <= l(lam)``.

    ``skip`` names one index set whose term is left out; it exists only so the
    harness can be shown to catch a broken weight.
    """
    lam = as_partition(lam)
    if skip is not None:
        return _f_abc_terms(lam, ctx, tuple(sorted(skip)))
    return _f_abc_terms(lam, ctx, None)


@lru_cache(maxsize=None)
def _f_abc_terms(lam: Partition, ctx: VarContext, skip) -> MultiPoly:
    prof = column_profile(lam)
    abc = ctx.var("a") * ctx.var("b") * ctx.var("c")
    total = ctx.zero
    for I in subsets(range(1, len(lam) + 1)):
        if I == skip:
            continue
        shifted = delta_profile(prof, I)
        if any(v < 0 for v in shifted):
            continue
        term = F_xi(shifted, ctx) * abc ** len(I)
        total = total - term if len(I) % 2 else total + term
    return total


def _pair_sum(lam, pairs, ctx: VarContext) -> MultiPoly:
    terms: dict[tuple[int, int, int], int] = {}
    for pair in pairs:
        w = triple_weight(lam, pair)
        terms[w] = terms.get(w, 0) + 1
    total = ctx.zero
    for (ea, eb, ec), mult in terms.items():
        total = total + ctx.monomial(mult, a=ea, b=eb, c=ec)
    return total


def f_abc_oracle(lam, ctx: VarContext = ABC) -> MultiPoly:
    """Weight ``a^c(nu) b^|mu/nu| c^|lam/mu|`` summed over the compatible family ``C(lam)``."""
    return _pair_sum(lam, enumerate_B(lam, "compatible"), ctx)


def lemma_sums(lam, J: Iterable[int] | None = None, ctx: VarContext = ABC) -> MultiPoly:
    """Weighted sum over ``B(lam)`` (``J is None``) or over ``B_J(lam)``."""
    if J is None:
        return _pair_sum(lam, enumerate_B(lam, "all"), ctx)
    return _pair_sum(lam, enumerate_B(lam, "rows", J=J), ctx)


def f_conj_ab(lam, ctx: VarContext = AB) -> MultiPoly:
    return f_ab(conjugate(lam), ctx)


def f_conj_abc(lam, ctx: VarContext = ABC) -> MultiPoly:
    return f_abc(conjugate(lam), ctx)


# -- bounded-sum coefficients ------------------------------------------------------

def parse_signs(text: str) -> tuple[int, ...]:
    """``"+-+"`` or ``"1,-1,1"`` to a sign vector."""
    text = text.strip()
    if text and set(text) <= {"+", "-"}:
        return tuple(1 if ch == "+" else -1 for ch in text)
    try:
        signs = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"malformed sign vector {text!r}") from None
    if not signs or any(s not in (1, -1) for s in signs):
        raise UsageError(f"malformed sign vector {text!r}")
    return signs


def neg_count(xi: Sequence[int]) -> int:
    return sum(1 for s in xi if s == -1)


def inverted_product(xi: Sequence[int], x: Sequence) -> Fraction:
    """``prod_i x_i^((xi_i - 1)/2)``: the product of ``1/x_i`` over ``xi_i = -1``."""
    out = Fraction(1)
    for s, v in zip(xi, x):
        if s == -1:
            v = as_rational(v)
            if v == 0:
                raise SingularPointError("zero coordinate under inversion")
            out /= v
    return out


def D_factor(xi: Sequence[int], z, x: Sequence) -> int | Fraction:
    """``1 - z * prod_i x_i^((xi_i - 1)/2)`` at a rational point."""
    if len(xi) != len(x):
        raise UsageError("sign vector and point have different lengths")
    return as_rational(1 - as_rational(z) * inverted_product(xi, x))


def _inv(v) -> Fraction:
    v = as_rational(v)
    if v == 0:
        raise SingularPointError("vanishing denominator")
    return Fraction(1) / v


def beta(xi: Sequence[int], m: int, a=None, b=None, x: Sequence = (), tag: str = "generic") -> int | Fraction:
    """Coefficient of the ``xi`` term of the bounded identity.

    ``tag="generic"`` evaluates the rational expression at ``(a, b)`` in a form
    where the removable ``0/0`` at ``xi = (1, ..., 1)`` is cancelled; the three
    special tags use the closed forms of the degenerate parameter values.
    """
    xi = tuple(xi)
    if tag == "1,0":
        return 1
    if tag == "1,-1":
        return 1 if m % 2 == 0 else as_rational(inverted_product(xi, x))
    if tag == "0,0":
        return 0 if neg_count(xi) % 2 else 1
    if tag != "generic":
        raise UsageError(f"unknown parameter tag {tag!r}")
    a, b = as_rational(a), as_rational(b)
    D = lambda z: D_factor(xi, z, x)  # noqa: E731
    if neg_count(xi) % 2:
        if a == b:
            raise SingularPointError("a = b")
        common = D(a) * D(b) * _inv(a - b)
        return as_rational(common * (a ** (m + 1) * _inv(D(_inv(a))) - b ** (m + 1) * _inv(D(_inv(b)))))
    ab = a * b
    if ab == 1:
        raise SingularPointError("ab = 1")
    return as_rational(
        D(ab) * _inv(1 - ab) * (1 - ab ** (m + 1) * D(1) * _inv(D(_inv(ab))))
    )


def beta_bracket(xi: Sequence[int], m: int, a, b, x: Sequence) -> Fraction:
    """The coefficient written as the undistributed bracket times its prefactor.

    Undefined at ``xi = (1, ..., 1)`` in the even case (``D(xi, 1) = 0``).
    """
    a, b = as_rational(a), as_rational(b)
    D = lambda z: D_factor(xi, z, x)  # noqa: E731
    if neg_count(xi) % 2:
        bracket = a ** (m + 1) * _inv(D(_inv(a))) - b ** (m + 1) * _inv(D(_inv(b)))
        return as_rational(bracket * D(a) * D(b) * _inv(a - b))
    ab = a * b
    bracket = _inv(D(1)) - ab ** (m + 1) * _inv(D(_inv(ab)))
    return as_rational(bracket * D(1) * D(ab) * _inv(1 - ab))


def specialize_f(lam, tag: str) -> int:
    """``f_lam(a, b)`` at ``(1,0)``, ``(1,-1)`` or ``(0,0)`` from the column profile."""
    prof = column_profile(lam)
    if tag == "1,0":
        return 1
    if tag == "1,-1":
        return int(all(c % 2 == 0 for c in prof))
    if tag == "0,0":
        return int(all(c == 0 for j, c in enumerate(prof, 1) if j % 2))
    raise UsageError(f"unknown parameter tag {tag!r}")


def tag_values(tag: str) -> tuple[int, int]:
    if tag not in SPECIAL_TAGS:
        raise UsageError(f"unknown parameter tag {tag!r}")
    a, b = tag.split(",")
    return int(a), int(b)


def weight_by_name(name: str):
    """Look up a per-partition weight used by the series checks."""
    return {
        "f_ab": f_ab,
        "f_abc": f_abc,
        "f_ab_conj": f_conj_ab,
        "f_abc_conj": f_conj_abc,
    }[name]


__all__ = [
    "AB",
    "ABC",
    "D_factor",
    "F_xi",
    "P_poly",
    "Partition",
    "Q_poly",
    "SPECIAL_TAGS",
    "beta",
    "beta_bracket",
    "f_ab",
    "f_ab_oracle",
    "f_abc",
    "f_abc_oracle",
    "f_conj_ab",
    "f_conj_abc",
    "inverted_product",
    "lemma_sums",
    "neg_count",
    "parse_signs",
    "specialize_f",
    "tag_values",
]
