"""Integer partitions, column profiles and the enumerations used by every sum."""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import UsageError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed).

    >>> Partition([3, 1, 0, 0])
    Partition(3, 1)
    >>> Partition([2, 1]).conjugate()
    Partition(2, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise UsageError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise UsageError(f"parts of {parts} are not weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"3,2,1"``, ``"(3,2,1)"`` or ``""``/``"()"`` for the empty partition."""
        body = text.strip().strip("()[]").strip()
        if not body or body == "∅":
            return cls()
        try:
            return cls(int(p) for p in body.replace(" ", "").split(",") if p != "")
        except ValueError:
            raise UsageError(f"malformed partition {text!r}") from None

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def part(self, i: int) -> int:
        """``lambda_i`` with 1-based ``i``; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def fits_in(self, m: int, n: int) -> bool:
        return len(self) <= n and (not self or self[0] <= m)

    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self)


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def column_profile(lam) -> tuple[int, ...]:
    """``(c_1, c_2, ...)`` with ``c_j = lambda_j - lambda_{j+1}``, the number of
    columns of length ``j``."""
    lam = as_partition(lam)
    return tuple(lam[j] - lam.part(j + 2) for j in range(len(lam)))


def from_column_profile(c: Iterable[int]) -> Partition:
    c = tuple(c)
    if any(x < 0 for x in c):
        raise UsageError(f"column profile {c} has a negative entry")
    parts, acc = [], 0
    for x in reversed(c):
        acc += x
        parts.append(acc)
    return Partition(reversed(parts))


def odd_col_count(lam) -> int:
    """Number of columns of odd length."""
    return sum(c for j, c in enumerate(column_profile(lam), 1) if j % 2)


def odd_row_count(lam) -> int:
    """Number of rows of odd length."""
    return sum(1 for p in as_partition(lam) if p % 2)


def is_conj_even(lam) -> bool:
    """True when every column has even length."""
    return all(c == 0 for j, c in enumerate(column_profile(lam), 1) if j % 2)


_PARITY = {
    "any": lambda lam: True,
    "even": Partition.is_even,
    "conj_even": is_conj_even,
}


def _of_size(d: int, max_part: int | None, max_length: int | None) -> Iterator[Partition]:
    # lexicographically decreasing
    def rec(rest: int, bound: int, slots: int | None, prefix: list[int]):
        if rest == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for p in range(min(rest, bound), 0, -1):
            prefix.append(p)
            yield from rec(rest - p, p, None if slots is None else slots - 1, prefix)
            prefix.pop()

    bound = d if max_part is None else max_part
    yield from rec(d, bound, max_length, [])


def enumerate_partitions(
    size: int | None = None,
    *,
    max_size: int | None = None,
    max_part: int | None = None,
    max_length: int | None = None,
    parity: str = "any",
) -> Iterator[Partition]:
    """Partitions in graded-lex order: by size, then lexicographically decreasing.

    Exactly one of ``size``/``max_size`` may be given; with neither, both
    ``max_part`` and ``max_length`` must be (the box ``m^n``).
    """
    if parity not in _PARITY:
        raise UsageError(f"unknown parity filter {parity!r}")
    for v in (size, max_size, max_part, max_length):
        if v is not None and v < 0:
            raise UsageError("enumeration bounds must be nonnegative")
    keep = _PARITY[parity]
    if size is not None:
        sizes = [size]
    elif max_size is not None:
        sizes = range(max_size + 1)
    elif max_part is not None and max_length is not None:
        sizes = range(max_part * max_length + 1)
    else:
        raise UsageError("enumeration needs a size, a size bound or a box")
    for d in sizes:
        for lam in _of_size(d, max_part, max_length):
            if keep(lam):
                yield lam


def partitions_of(d: int, parity: str = "any") -> Iterator[Partition]:
    return enumerate_partitions(d, parity=parity)


def partitions_in_box(m: int, n: int, parity: str = "any") -> Iterator[Partition]:
    """All ``lambda`` contained in the rectangle ``(m^n)``."""
    return enumerate_partitions(max_part=m, max_length=n, parity=parity)
