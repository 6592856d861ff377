"""Exact combinatorial value types: partitions, compositions, descent sets, permutations.

A descent set of degree n is a subset of [n-1] = {1, ..., n-1}; descent sets
are in bijection with compositions of n by taking partial sums.  Everything
here is an immutable value with a total order, so that enumerations, reports
and serialized output are deterministic.  Permutations are 1-based, in
one-line notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class BoundExceeded(ValueError):
    """An enumeration was asked to exceed its configured size bound."""


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    >>> Partition((4, 3, 2)).size
    9
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must weakly decrease: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k]

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(tuple(cols))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True, order=True)
class Composition:
    """An ordered sequence of positive integers.

    >>> Composition((2, 3, 1, 2, 1)).size
    9
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def prefix_sums(self) -> tuple[int, ...]:
        total, sums = 0, []
        for p in self.parts:
            total += p
            sums.append(total)
        return tuple(sums)

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def to_partition(self) -> Partition:
        if not self.is_partition():
            raise ValueError(f"composition {self.parts} is not weakly decreasing")
        return Partition(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class DescentSet:
    """A subset of [n-1] tagged with its degree n.

    Equality requires equal degree; the same member set at two different
    degrees indexes two different quasisymmetric functions.
    """

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        if self.n < 1:
            raise ValueError(f"degree must be positive, got {self.n}")
        bad = [m for m in self.members if not 1 <= m <= self.n - 1]
        if bad:
            raise ValueError(f"members {sorted(bad)} outside [1, {self.n - 1}]")

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.sorted_members)

    def complement(self) -> "DescentSet":
        return DescentSet(self.n, frozenset(range(1, self.n)) - self.members)

    def __contains__(self, m: int) -> bool:
        return m in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.sorted_members) + "}"


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 3, 1, 4)).inverse().word
    (3, 1, 2, 4)
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.word)}: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    @cached_property
    def _pos(self) -> tuple[int, ...]:
        # 1-based position of each value; index 0 unused
        pos = [0] * (self.n + 1)
        for j, v in enumerate(self.word, start=1):
            pos[v] = j
        return tuple(pos)

    def position(self, value: int) -> int:
        return self._pos[value]

    def inverse(self) -> "Permutation":
        return Permutation(self._pos[1:])

    def swap_values(self, a: int, b: int) -> "Permutation":
        new = list(self.word)
        pa, pb = self._pos[a], self._pos[b]
        new[pa - 1], new[pb - 1] = b, a
        return Permutation(tuple(new))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def composition_from_subset(d: DescentSet) -> Composition:
    """The composition of n whose partial sums are the members of d.

    >>> composition_from_subset(DescentSet(9, frozenset({2, 5, 6, 8}))).parts
    (2, 3, 1, 2, 1)
    """
    parts, prev = [], 0
    for m in d.sorted_members:
        parts.append(m - prev)
        prev = m
    parts.append(d.n - prev)
    return Composition(tuple(parts))


def subset_from_composition(a: Composition) -> DescentSet:
    """Partial sums of a, excluding the total; inverse of composition_from_subset."""
    return DescentSet(a.size, frozenset(a.prefix_sums()[:-1]))


@dataclass(frozen=True)
class DominanceRelation:
    """Outcome of a dominance comparison between two compositions."""

    le: bool
    ge: bool

    @property
    def eq(self) -> bool:
        return self.le and self.ge

    @property
    def incomparable(self) -> bool:
        return not self.le and not self.ge


def dominance_leq(beta: Composition, alpha: Composition) -> DominanceRelation:
    """Compare beta and alpha in dominance order on compositions of n.

    alpha dominates beta when every prefix sum of alpha is at least the
    corresponding prefix sum of beta; the shorter prefix-sum sequence is
    padded with its total so lengths need not agree.
    """
    if alpha.size != beta.size:
        raise ValueError(f"sizes differ: |{alpha}| = {alpha.size}, |{beta}| = {beta.size}")
    sa, sb = alpha.prefix_sums(), beta.prefix_sums()
    total = alpha.size
    k = max(len(sa), len(sb))
    sa = sa + (total,) * (k - len(sa))
    sb = sb + (total,) * (k - len(sb))
    le = all(b <= a for a, b in zip(sa, sb))
    ge = all(b >= a for a, b in zip(sa, sb))
    return DominanceRelation(le=le, ge=ge)


def descent_set(w: Permutation) -> DescentSet:
    """Positions i with w_i > w_{i+1}."""
    return DescentSet(w.n, frozenset(i for i in range(1, w.n) if w.word[i - 1] > w.word[i]))


def inverse_descent_set(w: Permutation) -> DescentSet:
    """Values i such that i+1 appears to the left of i in w.

    >>> sorted(inverse_descent_set(Permutation((7, 9, 3, 4, 6, 1, 2, 5, 8))))
    [2, 5, 6, 8]
    """
    return DescentSet(
        w.n, frozenset(i for i in range(1, w.n) if w.position(i + 1) < w.position(i))
    )


def inversions(w: Permutation) -> int:
    """Number of pairs a < b with w_a > w_b."""
    count = 0
    for j in range(w.n):
        for k in range(j + 1, w.n):
            if w.word[j] > w.word[k]:
                count += 1
    return count


def subword_restrict(w: Permutation, letters: Iterable[int]) -> tuple[int, ...]:
    """The letters of the given value set, in their order of appearance in w."""
    wanted = set(letters)
    bad = [v for v in wanted if not 1 <= v <= w.n]
    if bad:
        raise ValueError(f"letters {sorted(bad)} outside [1, {w.n}]")
    return tuple(v for v in w.word if v in wanted)


def standardize(u: Sequence[int]) -> Permutation:
    """Order-isomorphic permutation of {1, ..., len(u)}; letters must be distinct.

    >>> standardize((3, 5, 2)).word
    (2, 3, 1)
    """
    if len(set(u)) != len(u):
        raise ValueError(f"letters must be distinct: {tuple(u)}")
    rank = {v: r for r, v in enumerate(sorted(u), start=1)}
    return Permutation(tuple(rank[v] for v in u))


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def is_partition(a: Composition) -> bool:
    return a.is_partition()


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in decreasing lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, max_part if max_part is not None else n):
        yield Partition(parts)


def compositions_of(n: int) -> Iterator[Composition]:
    """All compositions of n, ordered by their descent subsets."""
    members: list[int] = []

    def gen(start: int) -> Iterator[frozenset[int]]:
        yield frozenset(members)
        for m in range(start, n):
            members.append(m)
            yield from gen(m + 1)
            members.pop()

    for mem in gen(1):
        yield composition_from_subset(DescentSet(n, mem))
