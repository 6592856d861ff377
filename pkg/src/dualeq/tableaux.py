"""Standard Young tableaux and ribbons.

Tableaux are stored with the bottom row first, entries increasing along rows
and up columns; renderings and reading words follow the usual convention of
reading rows from top to bottom.  A ribbon of length n is determined by its
descent set: cells are laid out from northwest to southeast, moving south
exactly at the descents, which forbids 2x2 blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import chain, combinations

from .core import (
    BoundExceeded,
    Composition,
    DescentSet,
    Partition,
    Permutation,
    composition_from_subset,
    partitions_of,
)

DEFAULT_SYT_BOUND = 10


@dataclass(frozen=True, order=True)
class StandardYoungTableau:
    """A bijective filling of a Young diagram, increasing along rows and up columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        lengths = [len(r) for r in self.rows]
        if not lengths or any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths {lengths} do not form a partition")
        n = sum(lengths)
        if sorted(chain.from_iterable(self.rows)) != list(range(1, n + 1)):
            raise ValueError(f"entries are not a bijection with 1..{n}: {self.rows}")
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not strictly increasing")
        for low, high in zip(self.rows, self.rows[1:]):
            if any(low[c] >= high[c] for c in range(len(high))):
                raise ValueError(f"columns not increasing upward: {low} below {high}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @cached_property
    def _row_of(self) -> tuple[int, ...]:
        # row index (bottom row = 0) of each entry; index 0 unused
        row_of = [0] * (self.n + 1)
        for k, row in enumerate(self.rows):
            for v in row:
                row_of[v] = k
        return tuple(row_of)

    def reading_word(self) -> Permutation:
        """Rows read left to right, topmost row first."""
        return Permutation(tuple(chain.from_iterable(reversed(self.rows))))

    def descents(self) -> DescentSet:
        """Entries i whose successor i+1 lies in a strictly higher row."""
        r = self._row_of
        return DescentSet(self.n, frozenset(i for i in range(1, self.n) if r[i + 1] > r[i]))

    def __str__(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


def reading_word(t: StandardYoungTableau) -> Permutation:
    return t.reading_word()


def tableau_descents(t: StandardYoungTableau) -> DescentSet:
    return t.descents()


def tableau_from_reading_word(shape: Partition, word: Permutation) -> StandardYoungTableau:
    """Rebuild a tableau of the given shape from a reading word (top row first)."""
    if word.n != shape.size:
        raise ValueError(f"word length {word.n} != |{shape}| = {shape.size}")
    rows, k = [], 0
    for length in reversed(shape.parts):
        rows.append(tuple(word.word[k : k + length]))
        k += length
    return StandardYoungTableau(tuple(reversed(rows)))


def enumerate_syt(shape: Partition, bound: int = DEFAULT_SYT_BOUND) -> tuple[StandardYoungTableau, ...]:
    """All standard fillings of shape, sorted by bottom-first row word.

    >>> len(enumerate_syt(Partition((2, 1))))
    2
    """
    n = shape.size
    if n > bound:
        raise BoundExceeded(f"|{shape}| = {n} exceeds enumeration bound {bound}")
    rows: list[list[int]] = [[] for _ in shape.parts]
    found: list[tuple[tuple[int, ...], ...]] = []

    def place(k: int) -> None:
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(rows)):
            if len(rows[r]) < shape.parts[r] and (r == 0 or len(rows[r]) < len(rows[r - 1])):
                rows[r].append(k)
                place(k + 1)
                rows[r].pop()

    place(1)
    found.sort(key=lambda rs: tuple(chain.from_iterable(rs)))
    return tuple(StandardYoungTableau(rs) for rs in found)


def standard_tableaux_of_size(n: int, bound: int = DEFAULT_SYT_BOUND) -> tuple[StandardYoungTableau, ...]:
    """All standard tableaux with n cells, grouped by shape in decreasing lex order."""
    if n > bound:
        raise BoundExceeded(f"size {n} exceeds enumeration bound {bound}")
    out: list[StandardYoungTableau] = []
    for shape in partitions_of(n):
        out.extend(enumerate_syt(shape, bound))
    return tuple(out)


def hook_length_count(shape: Partition) -> int:
    """Number of standard fillings of shape, by the hook length formula."""
    conj = shape.conjugate().parts
    hooks = 1
    for r, length in enumerate(shape.parts):
        for c in range(length):
            hooks *= (length - c) + (conj[c] - r) - 1
    return math.factorial(shape.size) // hooks


def superstandard(shape: Partition) -> StandardYoungTableau:
    """Row-by-row filling from the bottom: 1..l_1, then l_1+1..l_1+l_2, and so on."""
    rows, k = [], 0
    for length in shape.parts:
        rows.append(tuple(range(k + 1, k + length + 1)))
        k += length
    return StandardYoungTableau(tuple(rows))


def substandard(shape: Partition) -> StandardYoungTableau:
    """Column-by-column filling, leftmost column first, each column bottom to top."""
    conj = shape.conjugate().parts
    grid = [[0] * length for length in shape.parts]
    k = 0
    for c, height in enumerate(conj):
        for r in range(height):
            k += 1
            grid[r][c] = k
    return StandardYoungTableau(tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class Ribbon:
    """A connected skew shape with no 2x2 block, encoded by its descent set."""

    n: int
    descents: DescentSet

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ribbon length must be positive, got {self.n}")
        if self.descents.n != self.n:
            raise ValueError(f"descent degree {self.descents.n} != ribbon length {self.n}")

    def rows(self) -> tuple[tuple[int, int], ...]:
        """Column spans (start, end), bottom row first; adjacent rows share one column."""
        runs = composition_from_subset(self.descents).parts
        spans, start = [], 1
        for length in runs:
            spans.append((start, start + length - 1))
            start += length - 1
        return tuple(reversed(spans))

    def __str__(self) -> str:
        return f"ribbon(n={self.n}, descents={self.descents})"


def ribbon_maj(nu: Ribbon) -> int:
    """Sum of the descent positions."""
    return sum(nu.descents.sorted_members)


def enumerate_ribbons(n: int, maj_target: int, last_descent_required: bool) -> tuple[Ribbon, ...]:
    """All ribbons of length n with the given major index whose last possible
    position n-1 is a descent exactly when required."""
    if n < 1:
        raise ValueError(f"ribbon length must be positive, got {n}")
    positions = range(1, n)
    out = [
        Ribbon(n, DescentSet(n, frozenset(combo)))
        for r in range(n)
        for combo in combinations(positions, r)
        if sum(combo) == maj_target and ((n - 1) in combo) == last_descent_required
    ]
    out.sort(key=lambda rib: rib.descents.sort_key())
    return tuple(out)


def ribbon_filling_descents(nu: Ribbon) -> tuple[DescentSet, ...]:
    """Descent sets of all standard fillings of the ribbon's skew diagram.

    Fillings increase along rows and up columns; the descent set of a filling
    collects the entries whose successor sits in a strictly higher row.
    """
    spans = nu.rows()
    nrows = len(spans)
    next_col = [lo for lo, _ in spans]
    row_of = [0] * (nu.n + 1)
    out: list[DescentSet] = []

    def cell_below_unfilled(r: int) -> bool:
        if r == 0:
            return False
        c = next_col[r]
        lo, hi = spans[r - 1]
        return lo <= c <= hi and next_col[r - 1] <= c

    def place(k: int) -> None:
        if k > nu.n:
            out.append(
                DescentSet(nu.n, frozenset(i for i in range(1, nu.n) if row_of[i + 1] > row_of[i]))
            )
            return
        for r in range(nrows):
            if next_col[r] <= spans[r][1] and not cell_below_unfilled(r):
                row_of[k] = r
                next_col[r] += 1
                place(k + 1)
                next_col[r] -= 1

    place(1)
    return tuple(sorted(out, key=DescentSet.sort_key))
