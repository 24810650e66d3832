"""Diagram combinatorics: horizontal strips, generalized subdiagrams, the
families B, B_J, B_p, C and the column-deletion surgery ``delta_J``.

Cells use (column, row) coordinates, both starting at 1, with row 1 on
top. Every cell set built here has columns that are prefixes in the row
coordinate, so it is stored as a tuple of column heights.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple

from .errors import UsageError
from .partitions import Partition, as_partition, column_profile, conjugate, from_column_profile


class CellSet:
    """Finite set of cells whose columns are all bottom-aligned prefixes."""

    __slots__ = ("heights",)

    def __init__(self, heights: Iterable[int]):
        h = list(heights)
        while h and h[-1] == 0:
            h.pop()
        if any(x < 0 for x in h):
            raise UsageError("column heights must be nonnegative")
        self.heights = tuple(h)

    @classmethod
    def from_partition(cls, lam) -> "CellSet":
        return cls(conjugate(as_partition(lam)))

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "CellSet":
        cells = set(cells)
        width = max((x for x, _ in cells), default=0)
        heights = [0] * width
        for x, y in cells:
            heights[x - 1] = max(heights[x - 1], y)
        out = cls(heights)
        if out.cells != frozenset(cells):
            raise UsageError("cell set has a column that is not a prefix")
        return out

    @property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for x, h in enumerate(self.heights, 1) for y in range(1, h + 1))

    def height(self, x: int) -> int:
        return self.heights[x - 1] if 1 <= x <= len(self.heights) else 0

    @property
    def size(self) -> int:
        return sum(self.heights)

    def odd_columns(self) -> int:
        return sum(1 for h in self.heights if h % 2)

    def is_partition(self) -> bool:
        hs = self.heights
        return all(hs[i] >= hs[i + 1] for i in range(len(hs) - 1))

    def to_partition(self) -> Partition:
        if not self.is_partition():
            raise UsageError("cell set is not a Ferrers diagram")
        return conjugate(Partition(self.heights))

    def __eq__(self, other) -> bool:
        if isinstance(other, CellSet):
            return self.heights == other.heights
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("CellSet", self.heights))

    def __repr__(self) -> str:
        return f"CellSet(heights={self.heights})"


class StripPair(NamedTuple):
    mu: Partition
    nu: CellSet


# -- horizontal strips ---------------------------------------------------------

def is_horizontal_strip(lam, mu) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    return len(mu) <= len(lam) and all(lam.part(i + 1) <= mu.part(i) <= lam.part(i) for i in range(1, len(lam) + 1))


def horizontal_strips(lam) -> Iterator[Partition]:
    """Every ``mu`` with ``lam/mu`` a horizontal strip (interlacing)."""
    lam = as_partition(lam)
    ranges = [range(lam[i], lam.part(i + 2) - 1, -1) for i in range(len(lam))]
    for parts in product(*ranges):
        yield Partition(parts)


def blocks(lam) -> list[tuple[int, int, int]]:
    """Nonempty blocks ``A_j(lam)`` as ``(j, first_column, last_column)``,
    left to right (so ``j`` decreases)."""
    lam = as_partition(lam)
    out = []
    start = 1
    for j, c in reversed(list(enumerate(column_profile(lam), 1))):
        if c:
            out.append((j, start, start + c - 1))
            start += c
    return out


def _block_choices(heights: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # nu heights in {h, h-1} (never negative), weakly decreasing along the block
    def rec(i: int, ceiling: int, acc: list[int]):
        if i == len(heights):
            yield tuple(acc)
            return
        h = heights[i]
        for g in (h, h - 1):
            if 0 <= g <= ceiling:
                acc.append(g)
                yield from rec(i + 1, g, acc)
                acc.pop()

    yield from rec(0, 1 << 30, [])


def generalized_subdiagrams(mu, ambient=None) -> Iterator[CellSet]:
    """The family ``H'``: subsets ``nu`` of ``mu`` with ``mu/nu`` a horizontal
    strip and ``nu`` meeting every block ``A_j`` of the ambient shape in a
    (shifted) Ferrers diagram.

    ``ambient`` defaults to ``mu`` itself, in which case every ``nu`` is a
    partition. Pass the outer shape ``lam`` (with ``mu`` in ``H(lam)``) to get
    the pairs of ``B(lam)``.
    """
    mu = as_partition(mu)
    ambient = mu if ambient is None else as_partition(ambient)
    if not ambient.contains(mu):
        raise UsageError(f"{mu} is not contained in {ambient}")
    mh = CellSet.from_partition(mu)
    pieces = []
    for _, first, last in blocks(ambient):
        hs = tuple(mh.height(x) for x in range(first, last + 1))
        pieces.append(list(_block_choices(hs)))
    for choice in product(*pieces):
        yield CellSet(h for block in choice for h in block)


def incompatible_rows(nu: CellSet) -> frozenset[int]:
    """Rows ``y`` having a cell ``(x+1, y)`` in ``nu`` but not ``(x, y)``."""
    hs = nu.heights
    rows: set[int] = set()
    for x in range(len(hs) - 1):
        if hs[x + 1] > hs[x]:
            rows.update(range(hs[x] + 1, hs[x + 1] + 1))
    return frozenset(rows)


# -- the families B, B_J, B_p, C --------------------------------------------------

def enumerate_B(lam, constraint: str = "all", J: Iterable[int] = (), p: int = 0) -> Iterator[StripPair]:
    """Pairs ``(mu, nu)`` with ``mu`` in ``H(lam)`` and ``nu`` in ``H'(mu)``.

    ``constraint``:

    - ``"all"`` -- the whole family ``B(lam)``;
    - ``"rows"`` -- ``B_J(lam)``: every row in ``J`` of ``nu`` is incompatible;
    - ``"min_incompatible"`` -- ``B_p(lam)``: at least ``p`` incompatible rows;
    - ``"compatible"`` -- ``C(lam)``: all rows compatible, i.e. ``nu`` in ``H(mu)``.
    """
    lam = as_partition(lam)
    J = frozenset(J)
    if constraint not in ("all", "rows", "min_incompatible", "compatible"):
        raise UsageError(f"unknown constraint {constraint!r}")
    for mu in horizontal_strips(lam):
        for nu in generalized_subdiagrams(mu, ambient=lam):
            if constraint == "all":
                yield StripPair(mu, nu)
                continue
            bad = incompatible_rows(nu)
            if constraint == "rows":
                ok = J <= bad
            elif constraint == "min_incompatible":
                ok = len(bad) >= p
            else:
                ok = not bad
            if ok:
                yield StripPair(mu, nu)


def triple_weight(lam, pair: StripPair) -> tuple[int, int, int]:
    """Exponents ``(c(nu), |mu/nu|, |lam/mu|)`` of ``a``, ``b``, ``c``."""
    lam = as_partition(lam)
    return pair.nu.odd_columns(), pair.mu.size - pair.nu.size, lam.size - pair.mu.size


# -- delta surgery -----------------------------------------------------------------

def delta_profile(profile: Iterable[int], J: Iterable[int]) -> tuple[int, ...]:
    """Subtract ``e_j + e_{j+1}`` for each ``j`` in ``J``; entries may go negative."""
    out = list(profile)
    J = sorted(set(J))
    need = max((j + 1 for j in J), default=0)
    out += [0] * (need - len(out))
    for j in J:
        if j < 1:
            raise UsageError("row indices start at 1")
        out[j - 1] -= 1
        out[j] -= 1
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def delta_partition(lam, J: Iterable[int]) -> Partition | None:
    """Partition with column profile ``delta_J Gamma(lam)``, or ``None`` if some
    entry goes negative."""
    prof = delta_profile(column_profile(lam), J)
    if any(c < 0 for c in prof):
        return None
    return from_column_profile(prof)


def delta_pair(lam, pair: StripPair, J: Iterable[int]) -> tuple[Partition, StripPair]:
    """Apply ``delta_J`` to a triple ``(lam, mu, nu)`` with ``(mu, nu)`` in ``B_J(lam)``.

    For each ``j`` in ``J`` the columns ``lam_{j+1}`` and ``lam_{j+1} + 1`` are
    deleted from all three diagrams and the columns to their right slide two
    places left.
    """
    lam = as_partition(lam)
    J = sorted(set(J))
    drop = set()
    for j in J:
        x = lam.part(j + 1)
        drop.update((x, x + 1))
    if len(drop) != 2 * len(J) or 0 in drop:
        raise UsageError(f"J={J} does not describe disjoint column pairs of {lam}")

    def cut(hs: CellSet) -> tuple[int, ...]:
        width = max(len(hs.heights), lam[0] if lam else 0)
        return tuple(hs.height(x) for x in range(1, width + 1) if x not in drop)

    new_lam = conjugate(Partition(cut(CellSet.from_partition(lam))))
    new_mu = conjugate(Partition(cut(CellSet.from_partition(pair.mu))))
    return new_lam, StripPair(new_mu, CellSet(cut(pair.nu)))


def subsets(indices: Iterable[int]) -> Iterator[tuple[int, ...]]:
    indices = tuple(indices)
    for k in range(len(indices) + 1):
        yield from combinations(indices, k)


# -- rendering -------------------------------------------------------------------

def render_triple(lam, mu, nu: CellSet | None = None) -> str:
    """Draw ``lam`` with ``×`` in ``lam/mu``, ``o`` in ``mu/nu`` and ``.`` in ``nu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    nu = CellSet.from_partition(mu) if nu is None else nu
    mcells = CellSet.from_partition(mu).cells
    ncells = nu.cells
    lines = []
    for y, row in enumerate(lam, 1):
        chars = []
        for x in range(1, row + 1):
            if (x, y) in ncells:
                chars.append(".")
            elif (x, y) in mcells:
                chars.append("o")
            else:
                chars.append("×")
        lines.append("".join(chars))
    return "\n".join(lines)
