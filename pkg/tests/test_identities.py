import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest
import sympy

from schurlab.errors import SingularPointError, UsageError
from schurlab.exact import VarContext
from schurlab.identities import (
    phi_eval,
    phi_truncated,
    rect_sum_eval,
    rhs_theorem5_eval,
    verify_det_identity,
    verify_point_identity,
    verify_series_identity,
)
from schurlab.identities.bounded import special_rhs, with_resampling, point_rng
from schurlab.identities.combinatorial import incl_excl_sides, verify_combinatorial
from schurlab.identities.determinants import (
    alternant,
    det_sides,
    leibniz_power_sum,
    linear_product,
    pair_product,
    vandermonde,
)
from schurlab.identities.series_ids import SERIES_SPECS, lhs_series, series_context
from schurlab.partitions import partitions_in_box
from schurlab.symfunc import complete_h, xcontext
from schurlab.weights import beta, f_abc


def _xcoeff(poly, xexps):
    """Coefficient of an x-monomial, as a polynomial in the parameters."""
    ctx = poly.ctx
    nx = len(xexps)
    out = ctx.zero
    for exps, c in poly.terms():
        if tuple(exps[:nx]) == tuple(xexps):
            out = out + ctx.monomial(c, dict(zip(ctx.names[nx:], exps[nx:])))
    return out


def _pt(x):
    return {f"x{i + 1}": v for i, v in enumerate(x)}


# -- series ---------------------------------------------------------------------

def test_phi_truncated_examples():
    ctx = series_context(1, "ab")
    a, b, x1 = ctx.vars("a", "b", "x1")
    assert phi_truncated(1, 1).body == 1 + (a + b) * x1
    assert phi_truncated(2, 0).body == series_context(2, "ab").one
    ctx2 = series_context(2, "ab")
    a, b = ctx2.vars("a", "b")
    got = _xcoeff(phi_truncated(2, 2).body, (1, 1))
    assert got == (a + b) ** 2 + 1


def test_lhs_series_examples():
    ctx = series_context(1)
    x1 = ctx.var("x1")
    assert lhs_series("one", 1, 2, ctx).body == 1 + x1 + x1**2
    ctx = series_context(1, "ab")
    a, b, x1 = ctx.vars("a", "b", "x1")
    assert lhs_series("f_ab", 1, 1, ctx).body == 1 + (a + b) * x1
    ctx = series_context(2)
    x1, x2 = ctx.vars("x1", "x2")
    assert lhs_series("conj_even", 2, 2, ctx).body == 1 + x1 * x2


@pytest.mark.parametrize("identity", sorted(SERIES_SPECS))
def test_series_identities_small(identity):
    assert verify_series_identity(identity, 2, 4).passed


def test_single_variable_three_parameter_coefficients():
    assert verify_series_identity("thm1", 1, 3).passed
    abc = VarContext(("a", "b", "c"))
    for k in range(5):
        assert f_abc((k,)) == complete_h(k, ctx=abc, variables=("a", "b", "c"))


def test_b_zero_reduces_to_the_column_count_series():
    ctx = series_context(2, "ab")
    full = lhs_series("f_ab", 2, 5, ctx).body.subs({"b": 0})
    other = lhs_series("a^c", 2, 5, ctx).body
    assert full == other


def test_grading_is_sound():
    # the degree <= d part does not depend on the cap used to build it
    ctx = series_context(2, "ab")
    big = lhs_series("f_ab", 2, 6, ctx).body
    for d in range(6):
        assert big.truncate(d) == lhs_series("f_ab", 2, d, ctx).body


def test_mutated_series_weight_fails_with_monomial():
    rep = verify_series_identity("thm1", 2, 4, weight=lambda lam, c: f_abc(lam, skip=(1,)).embed(c))
    assert not rep.passed and rep.witness["monomial"]


# -- rectangle sums ---------------------------------------------------------------

def test_rect_sum_examples():
    x = [Fraction(2, 3), Fraction(-3, 5)]
    assert rect_sum_eval(2, 0, 2, 3, x) == 1
    assert rect_sum_eval(1, 2, 0, 0, [Fraction(1, 2)], "one") == Fraction(7, 4)
    a, b = Fraction(1, 3), Fraction(-2)
    expect = 1 + (a + b) * (x[0] + x[1]) + (1 + a * b) * x[0] * x[1]
    assert rect_sum_eval(2, 1, a, b, x) == expect


def test_single_variable_rectangles_pass():
    for m in range(5):
        assert verify_point_identity("thm5", 1, m).passed
    assert rhs_theorem5_eval(1, 0, Fraction(1, 2), Fraction(1, 3), [Fraction(5, 7)]) == 1


def test_trivial_sign_vector_term_is_phi():
    a, b, x = Fraction(2, 7), Fraction(-1, 3), [Fraction(3, 4), Fraction(-2, 5)]
    assert beta((1, 1), 3, a, b, x) == 1
    assert phi_eval(x, a, b) == 1 / ((1 - a * x[0]) * (1 - b * x[0]) * (1 - a * x[1]) * (1 - b * x[1])
                                     * (1 - x[0] * x[1]))


def test_two_variable_rectangle_formula_disagrees_symbolically():
    # independent evaluation of the printed sign-vector sum with sympy at m=0
    a, b, x1, x2 = sympy.symbols("a b x1 x2")
    X = (x1, x2)

    def D(xi, z):
        return 1 - z * sympy.Mul(*[v ** sympy.Rational(s - 1, 2) for s, v in zip(xi, X)])

    def phi(y):
        out = 1 / ((1 - a * y[0]) * (1 - b * y[0]) * (1 - a * y[1]) * (1 - b * y[1]) * (1 - y[0] * y[1]))
        return out

    m = 0
    total = 0
    for xi in product((1, -1), repeat=2):
        y = [v if s == 1 else 1 / v for s, v in zip(xi, X)]
        if xi.count(-1) % 2:
            coef = (a ** (m + 1) / D(xi, 1 / a) - b ** (m + 1) / D(xi, 1 / b)) * D(xi, a) * D(xi, b) / (a - b)
        elif xi == (1, 1):
            coef = 1  # the bracket has a removable 0/0 here; its value is 1
        else:
            coef = (1 / D(xi, 1) - (a * b) ** (m + 1) / D(xi, 1 / (a * b))) * D(xi, 1) * D(xi, a * b) / (1 - a * b)
        total += coef * phi(y) * sympy.Mul(*[v ** sympy.Rational(m * (1 - s), 2) for s, v in zip(xi, X)])
    gap = sympy.together(total - 1)
    num = sympy.factor(sympy.numer(gap))
    assert num != 0
    # it does vanish at the three special parameter pairs
    for av, bv in [(1, 0), (1, -1), (0, 0)]:
        assert sympy.simplify(num.subs({a: av, b: bv})) == 0
    assert sympy.simplify(num.subs({a: sympy.Rational(1, 2), b: 0})) != 0
    # and our evaluator sees the same nonzero gap
    vals = {a: sympy.Rational(2, 5), b: sympy.Rational(4, 3), x1: sympy.Rational(3, 7), x2: sympy.Rational(-5, 2)}
    ours = rhs_theorem5_eval(2, 0, Fraction(2, 5), Fraction(4, 3), [Fraction(3, 7), Fraction(-5, 2)])
    assert sympy.Rational(ours.numerator, ours.denominator) - 1 == gap.subs(vals)


@pytest.mark.parametrize("tag, which, scale", [("1,0", "a", 1), ("1,-1", "b", 2), ("0,0", "c", 1)])
def test_special_parameter_chain(tag, which, scale):
    rng = random.Random(tag)
    for n in (1, 2, 3):
        if which == "c" and n % 2:
            continue
        for m in range(4):
            def ev(a, b, x):
                return rhs_theorem5_eval(n, scale * m, 0, 0, x, tag), special_rhs(which, n, m, x)
            _, (lhs, rhs) = with_resampling(rng, n, ev)
            assert lhs == rhs


@pytest.mark.parametrize("which, n, top, power, parity", [
    ("a", 1, 0, 1, "any"), ("a", 2, 0, 1, "any"), ("a", 3, 0, 1, "any"),
    ("b", 1, 1, 2, "even"), ("b", 2, 1, 2, "even"), ("b", 3, 1, 2, "even"),
])
def test_determinant_forms_match_sign_vector_sums(which, n, top, power, parity):
    rng = random.Random(f"{which}{n}")
    for m in range(4):
        det = alternant(n, (2 * m if which == "b" else m) + 2 * n + top, -1)
        den = linear_product(n, power) * pair_product(n)
        for _ in range(10):
            def ev(a, b, x):
                d = den.eval_at(_pt(x))
                if d == 0:
                    raise SingularPointError("zero")
                return det.eval_at(_pt(x)) / d, special_rhs(which, n, m, x)
            _, (lhs, rhs) = with_resampling(rng, n, ev)
            assert lhs == rhs


def test_even_determinant_pair_matches_sign_vector_sum():
    rng = random.Random("c2")
    n = 2
    for m in range(4):
        top = m + 2 * n - 1
        num = alternant(n, top, -1) + alternant(n, top, 1)
        den = pair_product(n) * 2
        for _ in range(10):
            def ev(a, b, x):
                d = den.eval_at(_pt(x))
                if d == 0:
                    raise SingularPointError("zero")
                return num.eval_at(_pt(x)) / d, special_rhs("c", n, m, x)
            _, (lhs, rhs) = with_resampling(rng, n, ev)
            assert lhs == rhs


def test_point_check_preconditions():
    with pytest.raises(UsageError):
        verify_point_identity("cor1c", 3, 2)
    with pytest.raises(UsageError):
        verify_point_identity("thm5", 2, None)
    with pytest.raises(UsageError):
        verify_point_identity("eq3", 2, 2)


def test_point_streams_are_reproducible():
    r1, r2 = point_rng(5, "cor1a", 2, 3), point_rng(5, "cor1a", 2, 3)
    assert [r1.random() for _ in range(5)] == [r2.random() for _ in range(5)]
    assert verify_point_identity("cor1a", 2, 3, seed=5) == verify_point_identity("cor1a", 2, 3, seed=5)


def test_truncation_tail_shrinks():
    for n in (1, 2):
        assert verify_point_identity("m_to_inf", n, trials=3).passed


# -- determinants -----------------------------------------------------------------

def test_weyl_type_b_two_variables():
    ctx = xcontext(2)
    x1, x2 = ctx.vars("x1", "x2")
    lhs, rhs = det_sides("cor2a", 2)[0]
    assert lhs == (1 - x1) * (1 - x2) * (x2 - x1) * (1 - x1 * x2) == rhs


def test_one_variable_alternant_is_geometric():
    x = xcontext(1).var("x1")
    for m in range(5):
        assert alternant(1, m + 2, -1) == 1 - x ** (m + 1)
    assert verify_det_identity("thm2", 1, 3).passed


def test_conj_even_box():
    assert list(partitions_in_box(2, 2, "conj_even")) == [(), (1, 1), (2, 2)]
    assert verify_det_identity("thm4", 2, 2).passed
    with pytest.raises(UsageError):
        verify_det_identity("thm4", 3, 1)


@pytest.mark.parametrize("identity", ["cor2a", "cor2b", "cor2c", "eq13", "eq14"])
def test_denominator_identities(identity):
    for n in (1, 2, 3):
        assert verify_det_identity(identity, n).passed


def test_m_zero_reduces_to_denominator_formulas():
    for n in (1, 2, 3):
        assert det_sides("thm2", n, 0)[0][0] == det_sides("cor2a", n)[0][0]
        assert det_sides("thm3", n, 0)[0][0] == det_sides("cor2b", n)[0][0]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_flipped_pair_factor_holds_only_with_even_pair_count(n):
    # with (1 - x_i x_j) in place of (x_i x_j - 1) the sign is (-1)^C(n,2)
    lhs = alternant(n, 2 * n, -1)
    flipped = linear_product(n, 1) * pair_product(n, flipped=True)
    assert (lhs == flipped) == (comb(n, 2) % 2 == 0)
    assert lhs == flipped * (-1) ** comb(n, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vandermonde_conventions(n):
    ascending = vandermonde(n, descending=False)
    assert leibniz_power_sum(n, 0) == ascending
    # exponents shifted up by one pick up a factor prod x_i
    ctx = xcontext(n)
    px = ctx.one
    for v in ctx.vars(*ctx.names):
        px = px * v
    assert leibniz_power_sum(n, 1) == px * ascending
    assert vandermonde(n) == ascending * (-1) ** comb(n, 2)
    assert leibniz_power_sum(n, 1) != vandermonde(n)


def test_remark_bridge():
    for n in (1, 2, 3):
        for m in range(3):
            assert verify_det_identity("remark1", n, m).passed


# -- finite checks ------------------------------------------------------------------

@pytest.mark.parametrize("identity, D", [("eq7", 8), ("eq8", 7), ("lemma1", 7), ("lemma2", 6), ("incl_excl", 6)])
def test_finite_checks_small(identity, D):
    assert verify_combinatorial(identity, D=D).passed


def test_unweighted_inclusion_exclusion_is_not_enough():
    sides = incl_excl_sides((4, 3, 1))
    assert sides["binomial"] == sides["compatible"] == sides["exact_J"]
    assert sides["unweighted"] != sides["compatible"]


def test_mutated_closed_form_fails():
    rep = verify_combinatorial("eq8", D=4, weight=lambda lam: f_abc(lam, skip=(1,)))
    assert not rep.passed
    assert rep.witness == {"lambda": "(2,1)", "monomial": "a*b*c", "lhs": "3", "rhs": "2"}


def test_route_and_pieri_checks():
    assert verify_combinatorial("pieri", n=3, D=4, m=3).passed
    assert verify_combinatorial("schur_routes", n=3, D=5, trials=2).passed
    with pytest.raises(UsageError):
        verify_combinatorial("pieri", D=3)
