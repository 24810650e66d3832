import random
from fractions import Fraction

import pytest

from schurlab.errors import SingularPointError, UsageError
from schurlab.partitions import Partition, column_profile, enumerate_partitions
from schurlab.weights import (
    AB,
    ABC,
    D_factor,
    F_xi,
    P_poly,
    Q_poly,
    beta,
    beta_bracket,
    f_ab,
    f_ab_oracle,
    f_abc,
    f_abc_oracle,
    f_conj_ab,
    lemma_sums,
    neg_count,
    parse_signs,
    specialize_f,
    tag_values,
)

a, b = AB.vars("a", "b")
A, B, C = ABC.vars("a", "b", "c")


def test_f_ab_examples():
    assert f_ab(()) == AB.one
    assert f_ab((1,)) == a + b
    assert f_ab((2, 1)) == (a + b) * (1 + a * b)
    assert f_ab_oracle((1,)) == a + b
    assert f_ab_oracle((2,)) == a**2 + a * b + b**2
    assert f_ab_oracle(()) == AB.one


def test_f_ab_accepts_lists():
    assert f_ab([2, 1]) == f_ab(Partition((2, 1)))


def test_f_ab_reduces_to_column_count_at_b_zero():
    for lam in enumerate_partitions(max_size=8):
        odd = sum(c for j, c in enumerate(column_profile(lam), 1) if j % 2)
        assert f_ab(lam).subs({"b": 0}) == a**odd


def test_P_Q():
    assert P_poly(0) == ABC.one == Q_poly(0)
    assert P_poly(1) == 1 + A * B + A * C + B * C
    assert Q_poly(1) == A + B + C + A * B * C
    assert P_poly(-1) == ABC.zero == Q_poly(-2)


def test_F_xi():
    assert F_xi((1,)) == A + B + C
    assert F_xi((0, 1)) == P_poly(1)
    assert F_xi((1, -1)) == ABC.zero
    assert F_xi(()) == ABC.one


def test_f_abc_examples():
    assert f_abc((1,)) == A + B + C
    assert f_abc((1, 1)) == 1 + A * B + A * C + B * C
    assert f_abc((2, 1)) == (A + B + C) * (1 + A * B + A * C + B * C) - A * B * C
    assert f_abc((2, 1)) == f_abc_oracle((2, 1))
    assert f_abc_oracle(()) == ABC.one
    assert f_abc_oracle((1,)) == A + B + C


def test_f_abc_degenerates_to_f_ab():
    for lam in enumerate_partitions(max_size=8):
        assert f_abc(lam).subs({"c": 0}) == f_ab(lam).embed(ABC)


def test_skip_hook_changes_the_weight():
    broken = f_abc((2, 1), skip=(1,))
    assert broken != f_abc_oracle((2, 1))
    assert broken.coefficient({"a": 1, "b": 1, "c": 1}) == 3
    assert f_abc_oracle((2, 1)).coefficient({"a": 1, "b": 1, "c": 1}) == 2


def test_lemma_sums():
    assert lemma_sums((1,)) == F_xi((1,))
    assert lemma_sums((2, 1), [1]) == A * B * C
    assert lemma_sums((1,), [1]) == ABC.zero


def test_conjugate_weight():
    assert f_conj_ab((1, 1)) == f_ab((2,))


def test_parse_signs():
    assert parse_signs("+-+") == (1, -1, 1)
    assert parse_signs("1,-1,1") == (1, -1, 1)
    with pytest.raises(UsageError):
        parse_signs("+x")
    assert neg_count((1, -1, -1)) == 2


def test_D_factor():
    assert D_factor((1, 1), 1, (2, 3)) == 0
    assert D_factor((-1, 1), 1, (2, 3)) == Fraction(1, 2)
    assert D_factor((-1, 1), 0, (2, 3)) == 1


def test_beta_special_values():
    x = [Fraction(3), Fraction(7)]
    for xi in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        assert beta(xi, 3, x=x, tag="1,0") == 1
        assert beta(xi, 2, x=x, tag="0,0") == (0 if neg_count(xi) % 2 else 1)
    assert beta((1, -1), 3, x=x, tag="1,-1") == Fraction(1, 7)
    assert beta((1, 1), 4, Fraction(1, 2), Fraction(1, 3), x) == 1


def test_beta_frozen_values():
    x = [Fraction(3), Fraction(7)]
    assert beta((-1, 1), 3, Fraction(1, 2), Fraction(1, 5), x) == Fraction(1477, 3000)


def test_beta_forms_agree_at_random_points():
    rng = random.Random(7)
    checked = 0
    for n in (1, 2, 3):
        while checked < 100 * n:
            a_, b_ = (Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(2))
            x = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)]
            xi = tuple(rng.choice((1, -1)) for _ in range(n))
            m = rng.randint(0, 4)
            try:
                ref = beta_bracket(xi, m, a_, b_, x)
            except (SingularPointError, ZeroDivisionError):
                continue
            assert beta(xi, m, a_, b_, x) == ref
            checked += 1


def test_beta_raises_on_singular_point():
    with pytest.raises(SingularPointError):
        beta((-1, 1), 1, Fraction(1, 2), Fraction(1, 2), [Fraction(3), Fraction(7)])


@pytest.mark.parametrize("tag", ["1,0", "1,-1", "0,0"])
def test_specialization_matches_evaluation(tag):
    av, bv = tag_values(tag)
    for lam in enumerate_partitions(max_size=12):
        assert f_ab(lam).eval_at({"a": av, "b": bv}) == specialize_f(lam, tag)


def test_specialization_examples():
    assert specialize_f((2, 2), "1,-1") == 1
    assert specialize_f((1,), "0,0") == 0
    rng = random.Random(3)
    for _ in range(20):
        lam = Partition(sorted((rng.randint(1, 6) for _ in range(rng.randint(0, 5))), reverse=True))
        assert specialize_f(lam, "1,0") == 1
