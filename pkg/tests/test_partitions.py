from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurlab.errors import UsageError
from schurlab.partitions import (
    Partition,
    column_profile,
    conjugate,
    enumerate_partitions,
    from_column_profile,
    is_conj_even,
    odd_col_count,
    odd_row_count,
    partitions_in_box,
    partitions_of,
)

BIG = Partition((10, 9, 8, 6, 1))


def test_partition_normalizes_and_validates():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(UsageError):
        Partition([1, 2])
    with pytest.raises(UsageError):
        Partition([2, -1])
    assert Partition.parse("(3, 2,1)") == (3, 2, 1)
    assert Partition.parse("") == () == Partition.parse("()")
    with pytest.raises(UsageError):
        Partition.parse("3,x")


@pytest.mark.parametrize("lam, conj", [
    ((2, 1), (2, 1)),
    ((3,), (1, 1, 1)),
    ((10, 9, 8, 6, 1), (5, 4, 4, 4, 4, 4, 3, 3, 2, 1)),
    ((), ()),
])
def test_conjugate(lam, conj):
    assert conjugate(lam) == conj


@pytest.mark.parametrize("lam, prof", [(BIG, (1, 1, 2, 5, 1)), ((), ()), ((2, 2), (0, 2))])
def test_column_profile(lam, prof):
    assert column_profile(lam) == prof
    assert from_column_profile(prof) == Partition(lam)


def test_column_and_row_parities():
    assert odd_col_count((2,)) == 2
    assert odd_col_count((1, 1)) == 0
    assert odd_col_count((2, 1)) == 1
    assert odd_row_count((3, 2, 1)) == 2
    assert odd_row_count((4, 2, 2)) == 0
    assert odd_row_count(BIG) == 2


def test_box_enumeration():
    assert list(partitions_in_box(1, 2)) == [(), (1,), (1, 1)]
    assert list(partitions_in_box(2, 2, "even")) == [(), (2,), (2, 2)]
    assert sorted(partitions_of(4, "conj_even")) == [(1, 1, 1, 1), (2, 2)]
    # the box (m^n) holds C(m+n, n) partitions
    for m in range(5):
        for n in range(5):
            assert sum(1 for _ in partitions_in_box(m, n)) == comb(m + n, n)


def test_partition_counts():
    counts = [sum(1 for _ in partitions_of(d)) for d in range(13)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_enumeration_order_and_bounds():
    lams = list(enumerate_partitions(max_size=5))
    assert [lam.size for lam in lams] == sorted(lam.size for lam in lams)
    assert all(len(lam) <= 2 for lam in enumerate_partitions(max_size=7, max_length=2))
    with pytest.raises(UsageError):
        list(enumerate_partitions())
    with pytest.raises(UsageError):
        list(enumerate_partitions(3, parity="odd"))


partitions = st.lists(st.integers(1, 8), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


@given(partitions)
def test_conjugation_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size
    assert is_conj_even(lam) == conjugate(lam).is_even()
    assert odd_col_count(lam) == odd_row_count(conjugate(lam))
