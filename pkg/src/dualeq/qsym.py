"""Exact arithmetic in the fundamental quasisymmetric basis and Schur expansions.

All coefficients are integer polynomials in a vector of q-variables (the
statistic grading), stored exactly; there is no floating point anywhere.
The Schur expander eliminates fundamental terms greedily along decreasing
lexicographic order of partitions, which is a linear extension of dominance;
correctness rests on the fact that the descent composition of a standard
tableau of shape lam is dominated by lam, with equality only for the
row-superstandard filling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .core import (
    DescentSet,
    Partition,
    composition_from_subset,
    partitions_of,
    subset_from_composition,
)
from .tableaux import (
    DEFAULT_SYT_BOUND,
    Ribbon,
    enumerate_syt,
    ribbon_filling_descents,
)


class QPoly:
    """An integer polynomial in a fixed number of q-variables.

    Terms map exponent vectors to nonzero integer coefficients.  The arity
    (exponent vector length) is fixed; mixing arities is an error.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, arity: int = 1):
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise ValueError(f"exponent vector {exps} has arity {len(exps)}, expected {arity}")
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.arity = arity
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, arity: int = 1) -> "QPoly":
        return cls({}, arity)

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "QPoly":
        exps = tuple(exps)
        return cls({exps: coeff}, arity=len(exps))

    @classmethod
    def constant(cls, coeff: int, arity: int = 1) -> "QPoly":
        return cls({(0,) * arity: coeff}, arity)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.arity == other.arity and self.terms == other.terms

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self.terms.items()}, self.arity)

    def _combine(self, other: "QPoly", sign: int) -> "QPoly":
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + sign * c
        return QPoly(out, self.arity)

    def __add__(self, other: "QPoly") -> "QPoly":
        return self._combine(other, +1)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self._combine(other, -1)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self.terms.items()}, self.arity)
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return QPoly(out, self.arity)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.items():
            if all(e == 0 for e in exps):
                bits.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                vars_ = "*".join(
                    f"q{k if self.arity > 1 else ''}" + (f"^{e}" if e > 1 else "")
                    for k, e in enumerate(exps, 1)
                    if e
                )
                bits.append(head + vars_)
        return " + ".join(bits)


class QSymExpr:
    """An exact expression in the fundamental basis of degree n."""

    __slots__ = ("n", "arity", "terms")

    def __init__(self, n: int, terms: Mapping[DescentSet, QPoly] | None = None, arity: int = 1):
        self.n = n
        self.arity = arity
        clean: dict[DescentSet, QPoly] = {}
        for d, coeff in (terms or {}).items():
            if d.n != n:
                raise ValueError(f"descent set {d} has degree {d.n}, expected {n}")
            if coeff.arity != arity:
                raise ValueError(f"coefficient arity {coeff.arity}, expected {arity}")
            if coeff:
                clean[d] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, n: int, arity: int = 1) -> "QSymExpr":
        return cls(n, {}, arity)

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Iterable[tuple[DescentSet, QPoly]], arity: int = 1
    ) -> "QSymExpr":
        acc: dict[DescentSet, QPoly] = {}
        for d, coeff in pairs:
            acc[d] = acc[d] + coeff if d in acc else coeff
        return cls(n, acc, arity)

    @classmethod
    def fundamental(cls, d: DescentSet, coeff: QPoly | None = None) -> "QSymExpr":
        coeff = coeff if coeff is not None else QPoly.constant(1)
        return cls(d.n, {d: coeff}, coeff.arity)

    def coefficient(self, d: DescentSet) -> QPoly:
        return self.terms.get(d, QPoly.zero(self.arity))

    def items(self) -> list[tuple[DescentSet, QPoly]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def scaled(self, coeff: QPoly) -> "QSymExpr":
        return QSymExpr(self.n, {d: c * coeff for d, c in self.terms.items()}, self.arity)

    def __add__(self, other: "QSymExpr") -> "QSymExpr":
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return QSymExpr(self.n, out, self.arity)

    def __sub__(self, other: "QSymExpr") -> "QSymExpr":
        return self + QSymExpr(other.n, {d: -c for d, c in other.terms.items()}, other.arity)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QSymExpr)
            and self.n == other.n
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"QSym(0; n={self.n})"
        bits = [f"({coeff})*Q{d}" for d, coeff in self.items()]
        return " + ".join(bits)


class SchurExpansion:
    """An exact integer-coefficient combination of Schur functions of degree n."""

    __slots__ = ("n", "arity", "terms")

    def __init__(self, n: int, terms: Mapping[Partition, QPoly] | None = None, arity: int = 1):
        self.n = n
        self.arity = arity
        clean: dict[Partition, QPoly] = {}
        for lam, coeff in (terms or {}).items():
            if lam.size != n:
                raise ValueError(f"partition {lam} has size {lam.size}, expected {n}")
            if coeff.arity != arity:
                raise ValueError(f"coefficient arity {coeff.arity}, expected {arity}")
            if coeff:
                clean[lam] = coeff
        self.terms = clean

    def items(self) -> list[tuple[Partition, QPoly]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def coefficient(self, lam: Partition) -> QPoly:
        return self.terms.get(lam, QPoly.zero(self.arity))

    def is_nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in self.terms.values())

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SchurExpansion(self.n, out, self.arity)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.n == other.n
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"Schur(0; n={self.n})"
        return " + ".join(f"({coeff})*s{lam}" for lam, coeff in self.items())


class MonomialPoly:
    """A polynomial in m commuting variables with QPoly coefficients."""

    __slots__ = ("m", "arity", "terms")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], QPoly] | None = None, arity: int = 1):
        self.m = m
        self.arity = arity
        clean: dict[tuple[int, ...], QPoly] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != m:
                raise ValueError(f"monomial {exps} has {len(exps)} variables, expected {m}")
            if coeff:
                clean[exps] = coeff
        self.terms = clean

    def items(self) -> list[tuple[tuple[int, ...], QPoly]]:
        return sorted(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialPoly)
            and self.m == other.m
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def swap_variables(self, k: int) -> "MonomialPoly":
        """Exchange variables k and k+1 (1-based)."""
        out: dict[tuple[int, ...], QPoly] = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            e[k - 1], e[k] = e[k], e[k - 1]
            key = tuple(e)
            out[key] = out[key] + coeff if key in out else coeff
        return MonomialPoly(self.m, out, self.arity)


@lru_cache(maxsize=None)
def _fundamental_monomials(n: int, members: tuple[int, ...], m: int) -> dict[tuple[int, ...], int]:
    """Exponent-vector counts of the degree-n fundamental function in m variables.

    Sums x_{i_1}...x_{i_n} over weakly increasing index sequences with strict
    growth forced at the given positions.
    """
    strict = set(members)
    counts: dict[tuple[int, ...], int] = {}
    exps = [0] * m

    def walk(j: int, value: int) -> None:
        if j == n:
            key = tuple(exps)
            counts[key] = counts.get(key, 0) + 1
            return
        lowest = value + 1 if j in strict else value
        for v in range(max(lowest, 1), m + 1):
            exps[v - 1] += 1
            walk(j + 1, v)
            exps[v - 1] -= 1

    walk(0, 0)
    return counts


def monomial_expand(e: QSymExpr, m: int) -> MonomialPoly:
    """Expand into m variables by enumerating the defining index sequences."""
    if m < 1:
        raise ValueError(f"need at least one variable, got {m}")
    acc: dict[tuple[int, ...], QPoly] = {}
    for d, coeff in e.terms.items():
        for exps, count in _fundamental_monomials(e.n, d.sorted_members, m).items():
            add = coeff * count
            acc[exps] = acc[exps] + add if exps in acc else add
    return MonomialPoly(m, acc, e.arity)


@lru_cache(maxsize=None)
def _gessel_descent_counts(shape: Partition, bound: int) -> tuple[tuple[DescentSet, int], ...]:
    counts: dict[DescentSet, int] = {}
    for t in enumerate_syt(shape, bound):
        d = t.descents()
        counts[d] = counts.get(d, 0) + 1
    return tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))


def schur_via_gessel(shape: Partition, bound: int = DEFAULT_SYT_BOUND) -> QSymExpr:
    """The Schur function of the given shape as a sum of fundamental terms,
    one per standard filling, indexed by the filling's descent set."""
    return QSymExpr(
        shape.size,
        {d: QPoly.constant(c) for d, c in _gessel_descent_counts(shape, bound)},
    )


def schur_to_qsym(expansion: SchurExpansion, bound: int = DEFAULT_SYT_BOUND) -> QSymExpr:
    """Rewrite a Schur combination in the fundamental basis."""
    pairs = []
    for lam, coeff in expansion.terms.items():
        for d, count in _gessel_descent_counts(lam, bound):
            pairs.append((d, coeff * count))
    return QSymExpr.from_pairs(expansion.n, pairs, expansion.arity)


@dataclass(frozen=True)
class GreedyResult:
    """Outcome of greedy triangular elimination: the recovered expansion and
    whatever could not be eliminated (zero exactly when the input is symmetric)."""

    expansion: SchurExpansion
    remainder: QSymExpr

    @property
    def ok(self) -> bool:
        return not self.remainder


def greedy_schur_expand(e: QSymExpr, bound: int = DEFAULT_SYT_BOUND) -> GreedyResult:
    """Eliminate fundamental terms along decreasing lex order of partitions.

    At each partition lam, the current coefficient of the fundamental term
    indexed by lam's partial-sum subset is the Schur coefficient of lam;
    triangularity of descent compositions against dominance makes this exact.
    Coefficients may be negative; positivity is judged separately.
    """
    remainder: dict[DescentSet, QPoly] = dict(e.terms)
    found: dict[Partition, QPoly] = {}
    for lam in partitions_of(e.n):
        d_lam = subset_from_composition(composition_from_subset_safe(lam))
        c = remainder.get(d_lam)
        if c is None or not c:
            continue
        found[lam] = c
        for d, count in _gessel_descent_counts(lam, bound):
            cur = remainder.get(d, QPoly.zero(e.arity))
            nxt = cur - c * count
            if nxt:
                remainder[d] = nxt
            else:
                remainder.pop(d, None)
    return GreedyResult(
        expansion=SchurExpansion(e.n, found, e.arity),
        remainder=QSymExpr(e.n, remainder, e.arity),
    )


def composition_from_subset_safe(lam: Partition):
    from .core import Composition

    return Composition(lam.parts)


def is_symmetric(e: QSymExpr) -> bool:
    """Whether the monomial expansion in n variables is invariant under all
    adjacent variable swaps (n variables decide symmetry in degree n)."""
    if e.n < 1:
        raise ValueError(f"degree must be positive, got {e.n}")
    expanded = monomial_expand(e, e.n)
    return all(expanded.swap_variables(k) == expanded for k in range(1, e.n))


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of a Schur positivity test."""

    status: str  # "positive" | "negative" | "not_symmetric"
    expansion: SchurExpansion | None = None
    witness: Partition | None = None
    remainder: QSymExpr | None = None

    @property
    def positive(self) -> bool:
        return self.status == "positive"


def is_schur_positive(e: QSymExpr, bound: int = DEFAULT_SYT_BOUND) -> PositivityVerdict:
    """Greedy-expand and judge: positive, negative (with witness partition),
    or not symmetric (with the nonzero remainder)."""
    result = greedy_schur_expand(e, bound)
    if not result.ok:
        return PositivityVerdict(status="not_symmetric", remainder=result.remainder)
    for lam, coeff in result.expansion.items():
        if not coeff.is_nonnegative():
            return PositivityVerdict(status="negative", expansion=result.expansion, witness=lam)
    return PositivityVerdict(status="positive", expansion=result.expansion)


def qsym_from_family(family, objects: Iterable | None = None) -> QSymExpr:
    """The generating function of a descent-carrying family: one fundamental
    term per object, weighted by q to the object's statistic."""
    chosen = family.objects if objects is None else tuple(objects)
    pairs = ((family.des(t), QPoly.monomial(family.stat(t))) for t in chosen)
    return QSymExpr.from_pairs(family.n, pairs, family.stat_arity)


def ribbon_schur(nu: Ribbon, bound: int = DEFAULT_SYT_BOUND) -> SchurExpansion:
    """Schur expansion of a ribbon Schur function, from its standard fillings."""
    if nu.n > bound:
        raise ValueError(f"ribbon length {nu.n} exceeds bound {bound}")
    pairs = [(d, QPoly.constant(1)) for d in ribbon_filling_descents(nu)]
    result = greedy_schur_expand(QSymExpr.from_pairs(nu.n, pairs), bound)
    if not result.ok or not result.expansion.is_nonnegative():
        raise AssertionError(f"ribbon expansion failed for {nu}: {result.remainder!r}")
    return result.expansion


def _ssyt_rows(length: int, m: int, floor: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Weakly increasing rows over [1, m], strictly above the given floor."""
    row = [0] * length

    def fill(c: int) -> Iterator[tuple[int, ...]]:
        if c == length:
            yield tuple(row)
            return
        lo = max(row[c - 1] if c else 1, floor[c] + 1 if c < len(floor) else 1)
        for v in range(lo, m + 1):
            row[c] = v
            yield from fill(c + 1)

    yield from fill(0)


def ssyt_polynomial(shape: Partition, m: int) -> MonomialPoly:
    """Generating polynomial of semistandard fillings with entries at most m.

    Independent brute force: rows weakly increase, columns strictly increase
    upward; each filling contributes the monomial of its content.
    """
    if m < 1:
        raise ValueError(f"need at least one variable, got {m}")
    counts: dict[tuple[int, ...], int] = {}

    def build(r: int, below: tuple[int, ...]) -> None:
        if r == len(shape.parts):
            exps = [0] * m
            for row in stack:
                for v in row:
                    exps[v - 1] += 1
            key = tuple(exps)
            counts[key] = counts.get(key, 0) + 1
            return
        for row in _ssyt_rows(shape.parts[r], m, below):
            stack.append(row)
            build(r + 1, row)
            stack.pop()

    stack: list[tuple[int, ...]] = []
    build(0, ())
    return MonomialPoly(m, {e: QPoly.constant(c) for e, c in counts.items()})
