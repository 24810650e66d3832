"""Finite checks: closed-form weights against brute-force enumerations, the
Pieri rule and agreement of the three Schur-polynomial constructions."""
from __future__ import annotations

import random
from fractions import Fraction
from math import comb
from typing import Callable

from ..errors import SamplingError, UsageError
from ..exact import MultiPoly
from ..partitions import Partition, column_profile, enumerate_partitions
from ..strips import delta_profile, enumerate_B, incompatible_rows, subsets, triple_weight
from ..symfunc import complete_h, pieri_expand, schur, schur_eval, schur_ssyt, xcontext
from ..weights import ABC, F_xi, f_ab, f_ab_oracle, f_abc, f_abc_oracle, lemma_sums
from .report import FAIL, PASS, CheckReport, make_params
from .series_ids import first_difference

COMBI_IDS = ("eq7", "eq8", "lemma1", "lemma2", "incl_excl", "pieri", "schur_routes")

WeightFn = Callable[[Partition], MultiPoly]


def _poly_witness(lam, lhs: MultiPoly, rhs: MultiPoly, **extra) -> dict | None:
    diff = lhs - rhs
    if not diff:
        return None
    # lowest monomial in graded order
    exps, _ = min(diff.terms(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
    names = diff.ctx.names
    mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(names, exps) if e) or "1"
    out = {"lambda": str(Partition(lam)), "monomial": mono,
           "lhs": str(lhs.coefficient(exps)), "rhs": str(rhs.coefficient(exps))}
    out.update(extra)
    return out


def _abc_power(p: int) -> MultiPoly:
    return (ABC.var("a") * ABC.var("b") * ABC.var("c")) ** p


def _pair_total(lam, pairs, weight: Callable[[object], int] = lambda pair: 1) -> MultiPoly:
    acc: dict[tuple[int, int, int], int] = {}
    for pair in pairs:
        mult = weight(pair)
        if mult:
            w = triple_weight(lam, pair)
            acc[w] = acc.get(w, 0) + mult
    return MultiPoly.from_dict(ABC, {w: c for w, c in acc.items()})


def check_eq7(D: int, weight: WeightFn | None = None) -> dict | None:
    closed = weight or f_ab
    for lam in enumerate_partitions(max_size=D):
        w = _poly_witness(lam, closed(lam), f_ab_oracle(lam))
        if w:
            return w
    return None


def check_eq8(D: int, weight: WeightFn | None = None) -> dict | None:
    closed = weight or f_abc
    for lam in enumerate_partitions(max_size=D):
        w = _poly_witness(lam, closed(lam), f_abc_oracle(lam))
        if w:
            return w
    return None


def check_lemma1(D: int) -> dict | None:
    for lam in enumerate_partitions(max_size=D):
        w = _poly_witness(lam, lemma_sums(lam), F_xi(column_profile(lam)))
        if w:
            return w
    return None


def check_lemma2(D: int) -> dict | None:
    """Exact-``J`` sums, plus: ``B_J`` is empty exactly when ``delta_J`` leaves a
    negative multiplicity."""
    for lam in enumerate_partitions(max_size=D):
        prof = column_profile(lam)
        for J in subsets(range(1, len(lam) + 1)):
            shifted = delta_profile(prof, J)
            w = _poly_witness(lam, lemma_sums(lam, J), _abc_power(len(J)) * F_xi(shifted), J=list(J))
            if w:
                return w
            empty = next(enumerate_B(lam, "rows", J=J), None) is None
            if empty != any(v < 0 for v in shifted):
                return {"lambda": str(lam), "J": list(J), "empty": empty, "shifted": list(shifted)}
    return None


def incl_excl_sides(lam) -> dict[str, MultiPoly]:
    """Three ways to reach the compatible-pair sum.

    ``exact_J``: alternating sum of the ``B_J`` sums; ``binomial``: alternating
    sum over ``B_p`` with each pair counted ``C(#incompatible rows, p)`` times;
    ``unweighted``: the same sum with every pair of ``B_p`` counted once.
    """
    lam = Partition(lam)
    pairs = list(enumerate_B(lam, "all"))
    exact = MultiPoly(ABC, {})
    for J in subsets(range(1, len(lam) + 1)):
        part = lemma_sums(lam, J)
        exact = exact - part if len(J) % 2 else exact + part
    bad = {id(p): len(incompatible_rows(p.nu)) for p in pairs}
    top = max(bad.values(), default=0)
    binom = MultiPoly(ABC, {})
    flat = MultiPoly(ABC, {})
    for p in range(top + 1):
        s = 1 if p % 2 == 0 else -1
        binom = binom + _pair_total(lam, pairs, lambda q: comb(bad[id(q)], p)) * s
        flat = flat + _pair_total(lam, pairs, lambda q: int(bad[id(q)] >= p)) * s
    return {"compatible": f_abc_oracle(lam), "exact_J": exact, "binomial": binom, "unweighted": flat}


def check_incl_excl(D: int) -> dict | None:
    for lam in enumerate_partitions(max_size=D):
        sides = incl_excl_sides(lam)
        for key in ("exact_J", "binomial"):
            w = _poly_witness(lam, sides[key], sides["compatible"], form=key)
            if w:
                return w
    return None


def check_pieri(n: int, D: int, kmax: int) -> dict | None:
    ctx = xcontext(n)
    for mu in enumerate_partitions(max_size=D, max_length=n):
        for k in range(kmax + 1):
            lhs = schur(mu, n, ctx) * complete_h(k, n, ctx)
            rhs = ctx.zero
            for lam in pieri_expand(mu, k, n):
                rhs = rhs + schur(lam, n, ctx)
            w = first_difference(lhs, rhs)
            if w:
                w.update({"mu": str(mu), "k": k})
                return w
    return None


def _distinct_points(rng: random.Random, n: int, count: int) -> list[list[Fraction]]:
    out = []
    for _ in range(count):
        for _ in range(200):
            pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
            if len(set(pt)) == n:
                out.append(pt)
                break
        else:
            raise SamplingError("could not draw distinct coordinates")
    return out


def check_schur_routes(n: int, D: int, points: int = 5, seed: int = 0) -> dict | None:
    for nn in range(1, n + 1):
        ctx = xcontext(nn)
        pts = _distinct_points(random.Random(f"{seed}:schur_routes:{nn}"), nn, points)
        for lam in enumerate_partitions(max_size=D, max_length=nn):
            jt = schur(lam, nn, ctx)
            w = first_difference(jt, schur_ssyt(lam, nn, ctx))
            if w:
                w.update({"lambda": str(lam), "route": "ssyt"})
                return w
            for pt in pts:
                lhs = jt.eval_at({f"x{i + 1}": v for i, v in enumerate(pt)})
                rhs = schur_eval(lam, pt)
                if lhs != rhs:
                    return {"lambda": str(lam), "route": "bialternant", "x": [str(v) for v in pt],
                            "lhs": str(lhs), "rhs": str(rhs)}
    return None


def verify_combinatorial(identity: str, n: int | None = None, m: int | None = None, D: int | None = None,
                         trials: int | None = None, seed: int | None = None,
                         weight: WeightFn | None = None) -> CheckReport:
    """Run one finite check.

    ``D`` bounds ``|lam|`` (``|mu|`` for Pieri); ``m`` bounds the strip size
    ``k`` for Pieri; ``trials`` is the number of bialternant points for
    ``schur_routes``. ``weight`` replaces the closed-form weight of ``eq7`` or
    ``eq8`` so a deliberately broken weight can be fed through the harness.
    """
    if identity not in COMBI_IDS:
        raise UsageError(f"{identity!r} is not a combinatorial check")
    if D is None or D < 0:
        raise UsageError(f"{identity} needs a size bound D >= 0")
    if weight is not None and identity not in ("eq7", "eq8"):
        raise UsageError("a replacement weight only applies to eq7 and eq8")
    params = make_params(D=D)
    if identity == "eq7":
        witness = check_eq7(D, weight)
    elif identity == "eq8":
        witness = check_eq8(D, weight)
    elif identity == "lemma1":
        witness = check_lemma1(D)
    elif identity == "lemma2":
        witness = check_lemma2(D)
    elif identity == "incl_excl":
        witness = check_incl_excl(D)
    else:
        if n is None or n < 1:
            raise UsageError(f"{identity} needs n >= 1")
        if identity == "pieri":
            kmax = 4 if m is None else m
            if kmax < 0:
                raise UsageError("strip size bound must be nonnegative")
            params = make_params(n=n, m=kmax, D=D)
            witness = check_pieri(n, D, kmax)
        else:
            pts = 5 if trials is None else trials
            seed = 0 if seed is None else seed
            params = make_params(n=n, D=D, trials=pts, seed=seed)
            witness = check_schur_routes(n, D, pts, seed)
    return CheckReport(identity, params, FAIL if witness else PASS, witness)


__all__ = ["COMBI_IDS", "incl_excl_sides", "verify_combinatorial"]
