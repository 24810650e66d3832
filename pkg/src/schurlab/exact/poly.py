"""Exact multivariate polynomials over the rationals.

Coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise; both are exact and always in lowest
terms. Exponent vectors are packed into a single integer key per monomial
(see :mod:`schurlab.exact._pykernel`).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from ..errors import UsageError
from . import kernel

Coeff = int | Fraction


def as_rational(value) -> Coeff:
    """Coerce ``value`` to an exact rational, ints kept as ints."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return as_rational(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return as_rational(Fraction(value.strip()))
    raise UsageError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class VarContext:
    """Ordered variable names, split into series variables and parameters.

    Series variables (the ``x_i``) are the ones truncated by
    :class:`~schurlab.exact.series.TruncatedSeries`; parameters are never
    truncated.
    """

    names: tuple[str, ...]
    series: frozenset[str] = frozenset()
    bits: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "series", frozenset(self.series))
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        if not self.series <= set(names):
            raise UsageError("series variables must belong to the context")
        nvars = max(len(names), 1)
        object.__setattr__(self, "bits", min(32, max(8, 64 // nvars)))

    @classmethod
    def create(cls, n: int = 0, params: Iterable[str] = ()) -> "VarContext":
        """Context ``x1..xn`` (series) followed by the given parameters."""
        xs = tuple(f"x{i}" for i in range(1, n + 1))
        return cls(xs + tuple(params), frozenset(xs))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"variable {name!r} not in context {self.names}") from None

    def shift(self, i: int) -> int:
        return self.bits * (self.nvars - 1 - i)

    @property
    def series_shifts(self) -> tuple[int, ...]:
        return tuple(self.shift(i) for i, v in enumerate(self.names) if v in self.series)

    @property
    def series_names(self) -> tuple[str, ...]:
        return tuple(v for v in self.names if v in self.series)

    def pack(self, exps: Iterable[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise UsageError(f"exponent vector {exps} has arity {len(exps)}, expected {self.nvars}")
        key = 0
        limit = 1 << self.bits
        for e in exps:
            if e < 0 or e >= limit:
                raise UsageError(f"exponent {e} outside [0, {limit})")
            key = (key << self.bits) | e
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        mask = (1 << self.bits) - 1
        out = [0] * self.nvars
        for i in range(self.nvars - 1, -1, -1):
            out[i] = key & mask
            key >>= self.bits
        return tuple(out)

    # -- constructors -----------------------------------------------------
    def const(self, c) -> "MultiPoly":
        c = as_rational(c)
        return MultiPoly(self, {0: c} if c else {})

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return MultiPoly(self, {0: 1})

    def var(self, name: str) -> "MultiPoly":
        return MultiPoly(self, {1 << self.shift(self.index(name)): 1})

    def vars(self, *names: str) -> tuple["MultiPoly", ...]:
        return tuple(self.var(v) for v in names)

    def monomial(self, coeff=1, exps: Mapping[str, int] | None = None, **kw: int) -> "MultiPoly":
        """``coeff * prod(v**e)`` from a name->exponent mapping."""
        vec = [0] * self.nvars
        for name, e in {**(exps or {}), **kw}.items():
            vec[self.index(name)] += e
        return MultiPoly.from_dict(self, {tuple(vec): coeff})


class MultiPoly:
    """Immutable exact polynomial in the variables of a :class:`VarContext`."""

    __slots__ = ("ctx", "_terms", "_maxdeg", "_hash")

    def __init__(self, ctx: VarContext, terms: dict[int, Coeff]):
        # ``terms`` must already be canonical: packed keys, no zero values.
        self.ctx = ctx
        self._terms = terms
        self._maxdeg = None
        self._hash = None

    @classmethod
    def from_dict(cls, ctx: VarContext, terms: Mapping[tuple[int, ...], object]) -> "MultiPoly":
        out: dict[int, Coeff] = {}
        for exps, c in terms.items():
            c = as_rational(c)
            if not c:
                continue
            k = ctx.pack(exps)
            v = out.get(k, 0) + c
            if v:
                out[k] = as_rational(v)
            else:
                out.pop(k, None)
        return cls(ctx, out)

    # -- inspection ---------------------------------------------------------
    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def packed(self) -> Mapping[int, Coeff]:
        return self._terms

    def terms(self) -> list[tuple[tuple[int, ...], Coeff]]:
        """``(exponents, coeff)`` pairs in graded-lex descending order."""
        items = [(self.ctx.unpack(k), c) for k, c in self._terms.items()]
        items.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
        return items

    def coefficient(self, exps: Iterable[int] | Mapping[str, int]) -> Coeff:
        if isinstance(exps, Mapping):
            vec = [0] * self.ctx.nvars
            for name, e in exps.items():
                vec[self.ctx.index(name)] = e
            exps = vec
        return self._terms.get(self.ctx.pack(exps), 0)

    def max_degree(self) -> int:
        """Largest total degree over all variables (-1 for the zero polynomial)."""
        if self._maxdeg is None:
            allshifts = tuple(self.ctx.shift(i) for i in range(self.ctx.nvars))
            bits = self.ctx.bits
            self._maxdeg = max(
                (kernel._pykernel.field_sum(k, bits, allshifts) for k in self._terms), default=-1
            )
        return self._maxdeg

    def degree(self) -> int:
        return self.max_degree()

    def series_degree(self) -> int:
        """Largest total degree in series variables (-1 for zero)."""
        shifts = self.ctx.series_shifts
        return max((kernel._pykernel.field_sum(k, self.ctx.bits, shifts) for k in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e, _ in self.terms()}
        return not degs or (len(degs) == 1 and (d is None or degs == {d}))

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_term(self) -> Coeff:
        return self._terms.get(0, 0)

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "MultiPoly") -> None:
        if other.ctx != self.ctx:
            raise UsageError(f"context mismatch: {self.ctx.names} vs {other.ctx.names}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return self.ctx.const(other)

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._lift(other)
        except UsageError:
            if isinstance(other, MultiPoly):
                raise
            return NotImplemented
        return MultiPoly(self.ctx, kernel.add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ctx, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._lift(other)
        except UsageError:
            if isinstance(other, MultiPoly):
                raise
            return NotImplemented
        return MultiPoly(self.ctx, kernel.add_terms(self._terms, other._terms, -1))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = as_rational(c)
        if not c:
            return self.ctx.zero
        return MultiPoly(self.ctx, {k: as_rational(v * c) for k, v in self._terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except UsageError:
                return NotImplemented
        return self.mul(other)

    def __rmul__(self, other) -> "MultiPoly":
        return self.scale(other)

    def mul(self, other: "MultiPoly", cap: int = -1, backend: str | None = None) -> "MultiPoly":
        """Product, optionally dropping monomials of series degree above ``cap``."""
        self._check(other)
        if not self._terms or not other._terms:
            return self.ctx.zero
        if self.max_degree() + other.max_degree() >= 1 << self.ctx.bits:
            raise OverflowError("product degree exceeds the exponent field width of the context")
        out = kernel.mul_terms(
            self._terms, other._terms, self.ctx.bits, self.ctx.series_shifts, cap, backend
        )
        return MultiPoly(self.ctx, out)

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise UsageError("polynomial powers must be nonnegative integers")
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / c)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient ``self / other``; raises ``ValueError`` if it is not a polynomial."""
        self._check(other)
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        ctx = self.ctx
        order = _grlex_key(ctx)
        lead_k = max(other._terms, key=order)
        lead_c = other._terms[lead_k]
        lead_e = ctx.unpack(lead_k)
        rem = dict(self._terms)
        heap = [(_neg(order(k)), k) for k in rem]
        heapq.heapify(heap)
        quot: dict[int, Coeff] = {}
        while heap:
            _, k = heapq.heappop(heap)
            c = rem.get(k)
            if not c:
                continue
            e = ctx.unpack(k)
            if any(x < y for x, y in zip(e, lead_e)):
                raise ValueError("polynomial division is not exact")
            qk = k - lead_k
            if isinstance(c, int) and isinstance(lead_c, int) and c % lead_c == 0:
                qc = c // lead_c
            else:
                qc = as_rational(Fraction(c) / lead_c)
            quot[qk] = qc
            for ok, oc in other._terms.items():
                nk = qk + ok
                nv = rem.get(nk, 0) - qc * oc
                if nv:
                    if nk not in rem:
                        heapq.heappush(heap, (_neg(order(nk)), nk))
                    rem[nk] = nv
                else:
                    rem.pop(nk, None)
        return MultiPoly(ctx, {k: as_rational(v) for k, v in quot.items()})

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ctx == other.ctx and self._terms == other._terms
        try:
            c = as_rational(other)
        except UsageError:
            return NotImplemented
        return self._terms == ({0: c} if c else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation -----------------------------------------------------------
    def eval_at(self, point: Mapping[str, object]) -> Coeff:
        """Exact value at a point assigning every context variable."""
        missing = [v for v in self.ctx.names if v not in point]
        if missing:
            raise UsageError(f"point does not assign {missing}")
        vals = [as_rational(point[v]) for v in self.ctx.names]
        return self._evaluate(vals)

    def _evaluate(self, vals) -> Coeff:
        ctx = self.ctx
        powers = [dict() for _ in vals]
        total = 0
        for k, c in self._terms.items():
            term = c
            for i, e in enumerate(ctx.unpack(k)):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = powers[i][e] = vals[i] ** e
                    term = term * p
            total = total + term
        return as_rational(total)

    def subs(self, values: Mapping[str, object]) -> "MultiPoly":
        """Substitute rationals for some variables; the context is unchanged."""
        ctx = self.ctx
        idx = {ctx.index(v): as_rational(x) for v, x in values.items()}
        out: dict[tuple[int, ...], Coeff] = {}
        for e, c in self.terms():
            e = list(e)
            for i, x in idx.items():
                if e[i]:
                    c = c * x ** e[i]
                    e[i] = 0
            if c:
                t = tuple(e)
                out[t] = out.get(t, 0) + c
        return MultiPoly.from_dict(ctx, out)

    def truncate(self, cap: int) -> "MultiPoly":
        shifts, bits = self.ctx.series_shifts, self.ctx.bits
        return MultiPoly(
            self.ctx,
            {k: c for k, c in self._terms.items() if kernel._pykernel.field_sum(k, bits, shifts) <= cap},
        )

    def embed(self, ctx: VarContext) -> "MultiPoly":
        """The same polynomial viewed in a context containing all its live variables."""
        if ctx == self.ctx:
            return self
        out = {}
        for e, c in self.terms():
            vec = [0] * ctx.nvars
            for name, x in zip(self.ctx.names, e):
                if x:
                    vec[ctx.index(name)] = x
            out[tuple(vec)] = c
        return MultiPoly.from_dict(ctx, out)

    def permute(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables by a permutation of the context names."""
        ctx = self.ctx
        perm = [ctx.index(mapping.get(v, v)) for v in ctx.names]
        out = {}
        for e, c in self.terms():
            vec = [0] * ctx.nvars
            for i, x in enumerate(e):
                vec[perm[i]] = x
            out[tuple(vec)] = c
        return MultiPoly.from_dict(ctx, out)

    # -- rendering -------------------------------------------------------------
    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({render(self)!r})"


def _grlex_key(ctx: VarContext):
    def key(k: int):
        e = ctx.unpack(k)
        return (sum(e), e)

    return key


def _neg(order_key):
    d, e = order_key
    return (-d, tuple(-x for x in e))


def render_monomial(names: tuple[str, ...], exps: tuple[int, ...]) -> str:
    parts = []
    for v, e in zip(names, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def render(p: MultiPoly) -> str:
    """Canonical text: graded-lex descending, ``^`` powers, explicit ``*``."""
    if not p:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.terms()):
        mono = render_monomial(p.ctx.names, e)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)

