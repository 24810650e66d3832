from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from schurlab.errors import UsageError
from schurlab.exact import (
    MultiPoly,
    TruncatedSeries,
    VarContext,
    as_rational,
    det_bareiss,
    det_cofactor,
    det_exact,
    det_rational,
    eval_at,
    expand_inverse_linear,
    kernel,
    poly_arith,
    render,
    series_mul,
)
from schurlab.exact import _pykernel

X2 = VarContext.create(2)
X2AB = VarContext.create(2, ("a", "b"))
AB = VarContext(("a", "b"))


def test_as_rational_normalizes():
    assert as_rational(Fraction(4, 2)) == 2 and type(as_rational(Fraction(4, 2))) is int
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(True) == 1
    with pytest.raises(UsageError):
        as_rational(0.5)


def test_difference_of_squares(backend):
    x1, x2 = X2.vars("x1", "x2")
    assert (x1 + x2) * (x1 - x2) == x1**2 - x2**2


def test_additive_identity():
    x1 = X2.var("x1")
    p = x1**3 - 2 * x1 + Fraction(1, 3)
    assert p + X2.zero == p


def test_hand_expansion_matches_two_row_weight(backend):
    a, b = AB.vars("a", "b")
    assert render((a + b) * (1 + a * b)) == render(a + b + a**2 * b + a * b**2)


def test_context_mismatch_is_usage_error():
    with pytest.raises(UsageError):
        X2.var("x1") + AB.var("a")
    with pytest.raises(UsageError):
        poly_arith(X2.var("x1"), AB.var("a"), "mul")


def test_poly_arith_ops():
    x1, x2 = X2.vars("x1", "x2")
    assert poly_arith(x1, x2, "add") == x1 + x2
    assert poly_arith(x1, x2, "sub") == x1 - x2
    assert poly_arith(x1, x2, "mul") == x1 * x2
    with pytest.raises(UsageError):
        poly_arith(x1, x2, "div")


def test_eval_at():
    x1, x2 = X2.vars("x1", "x2")
    assert eval_at(x1 + x2, {"x1": Fraction(1, 2), "x2": Fraction(1, 3)}) == Fraction(5, 6)
    a, b = AB.vars("a", "b")
    assert (a + b).eval_at({"a": 2, "b": 3}) == 5
    with pytest.raises(UsageError):
        eval_at(x1 + x2, {"x1": 1})


def test_exact_division():
    x1, x2 = X2.vars("x1", "x2")
    p = (x1 - x2) * (1 - x1 * x2) ** 2
    assert p / (1 - x1 * x2) == (x1 - x2) * (1 - x1 * x2)


def test_truncated_product_drops_high_degree(backend):
    x1 = X2.var("x1")
    s = TruncatedSeries(1 + x1, 1)
    assert series_mul(s, s).body == 1 + 2 * x1
    assert s * TruncatedSeries.one(X2, 1) == s


def test_cap_mismatch():
    x1 = X2.var("x1")
    with pytest.raises(UsageError):
        series_mul(TruncatedSeries(1 + x1, 1), TruncatedSeries(1 + x1, 2))


def test_two_geometric_factors_give_complete_homogeneous():
    ctx = VarContext.create(1, ("a", "b"))
    a, b, x1 = ctx.vars("a", "b", "x1")
    s = expand_inverse_linear(a, {"x1": 1}, 2) * expand_inverse_linear(b, {"x1": 1}, 2)
    assert s.body == 1 + (a + b) * x1 + (a**2 + a * b + b**2) * x1**2


def test_inverse_linear_examples():
    x1, x2 = X2.vars("x1", "x2")
    assert expand_inverse_linear(X2.one, x1 * x2, 3).body == 1 + x1 * x2
    a, b, y1, y2 = X2AB.vars("a", "b", "x1", "x2")
    assert expand_inverse_linear(a, {"x1": 1}, 2).body == 1 + a * y1 + a**2 * y1**2
    ab = a * b
    assert expand_inverse_linear(ab, {"x1": 1, "x2": 1}, 4).body == 1 + ab * y1 * y2 + ab**2 * y1**2 * y2**2


def test_inverse_linear_needs_positive_degree():
    with pytest.raises(UsageError):
        expand_inverse_linear(AB.var("a"), {}, 3)


def test_determinant_examples():
    assert det_exact([[AB.one]]) == 1
    x1, x2 = X2.vars("x1", "x2")
    vdm = det_exact([[X2.one, X2.one], [x1, x2]])
    assert vdm == x2 - x1
    M = [[x**0 - x**3, x - x**2] for x in (x1, x2)]
    d = det_exact(M)
    assert d == (1 - x1) * (1 - x2) * (x2 - x1) * (1 - x1 * x2)
    assert d.eval_at({"x1": 2, "x2": 3}) == det_rational([[1 - 8, 2 - 4], [1 - 27, 3 - 9]])


def test_non_square_determinant():
    with pytest.raises(UsageError):
        det_exact([[X2.one, X2.one]])


def test_det_methods_agree(backend):
    ctx = VarContext.create(4)
    xs = ctx.vars("x1", "x2", "x3", "x4")
    M = [[(x + j) ** (i % 3) * (x - i) for j, x in enumerate(xs)] for i in range(4)]
    assert det_cofactor(M) == det_bareiss(M) == det_exact(M)


def test_det_rational_matches_sympy():
    M = [[Fraction(i * i + 1, j + 2) - j for j in range(4)] for i in range(4)]
    assert det_rational(M) == sympy.Matrix(M).det()


def test_render_is_canonical():
    x1, x2 = X2.vars("x1", "x2")
    assert render(x2 + x1) == render(x1 + x2)
    assert render(X2.zero) == "0"


def test_wide_exponents_take_python_path():
    # 9 variables leave 8 bits per exponent; large products still work
    ctx = VarContext.create(9)
    xs = ctx.vars(*ctx.names)
    p = sum(xs[1:], xs[0])
    q = p**3
    assert q.eval_at({v: 1 for v in ctx.names}) == 9**3


def test_big_coefficients_fall_back():
    x1 = X2.var("x1")
    p = (10**30) * x1 + 1
    assert (p * p).coefficient((1, 0)) == 2 * 10**30
    out = kernel.mul_terms({1: 2**62}, {1: 4}, X2.bits, X2.series_shifts, -1)
    assert out == {2: 2**64}


# -- properties ---------------------------------------------------------------------

coeffs = st.integers(-50, 50) | st.fractions(min_value=-50, max_value=50, max_denominator=7)
monos = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monos, coeffs, max_size=6).map(lambda d: MultiPoly.from_dict(X2AB, d))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == X2AB.zero


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.integers(-1, 8))
def test_backends_agree(p, q, cap):
    bits, shifts = X2AB.bits, X2AB.series_shifts
    py = _pykernel.mul_terms(p.packed, q.packed, bits, shifts, cap)
    assert kernel.mul_terms(p.packed, q.packed, bits, shifts, cap, backend="python") == py
    if kernel._ckernel is not None:
        assert kernel.mul_terms(p.packed, q.packed, bits, shifts, cap, backend="cython") == py


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_product_matches_sympy(p, q):
    syms = sympy.symbols(X2AB.names)

    def to_sympy(poly):
        return sum((sympy.Rational(str(c)) * sympy.Mul(*[s**e for s, e in zip(syms, exps)])
                    for exps, c in poly.terms()), sympy.Integer(0))

    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@settings(max_examples=40, deadline=None)
@given(polys, st.fractions(max_denominator=5), st.fractions(max_denominator=5))
def test_evaluation_is_a_homomorphism(p, u, v):
    pt = {"x1": u, "x2": v, "a": 2, "b": Fraction(-1, 3)}
    q = p * p + p
    assert q.eval_at(pt) == p.eval_at(pt) ** 2 + p.eval_at(pt)
