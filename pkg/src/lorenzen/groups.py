"""Ordered abelian groups of finite rank with decidable positive cones.

Elements are tuples of arbitrary-precision ints.  Four cone kinds are
supported: the componentwise product order on Z^d, a matrix cone
(a >= 0 iff M.a >= 0 componentwise, M of full column rank), the cone of
a numerical semigroup on Z, and the trivial (discrete) order.  All
values are immutable; semigroup membership tables are sealed at
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ArgumentError, DimensionError, UnsupportedConeError

Vec = tuple  # tuple[int, ...]
Subset = tuple  # tuple[Vec, ...], canonical


# ---------------------------------------------------------------------------
# element arithmetic

def vec(coords) -> Vec:
    if isinstance(coords, int):
        return (coords,)
    return tuple(int(c) for c in coords)


def as_vec(v) -> Vec:
    """Coerce to a tuple vector; bare ints become rank-1 elements."""
    if isinstance(v, tuple):
        return v
    return vec(v)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vec_scale(n: int, u: Vec) -> Vec:
    return tuple(n * a for a in u)


def zero(rank: int) -> Vec:
    return (0,) * rank


# ---------------------------------------------------------------------------
# finite subsets (canonical: sorted, deduplicated, nonempty)

def finite_subset(elems: Iterable) -> Subset:
    """Canonicalise an iterable of elements into a sorted dedup'd tuple."""
    out = sorted({as_vec(e) for e in elems})
    if not out:
        raise ArgumentError("finite subsets must be nonempty")
    ranks = {len(e) for e in out}
    if len(ranks) != 1:
        raise DimensionError("mixed ranks in subset: %s" % sorted(ranks))
    return tuple(out)


def sumset(A: Subset, B: Subset) -> Subset:
    return finite_subset(vec_add(a, b) for a in A for b in B)


def nfold(A: Subset, n: int) -> Subset:
    """A + ... + A, n summands."""
    if n < 1:
        raise ArgumentError("nfold needs n >= 1 (empty sets are forbidden)")
    acc = A
    for _ in range(n - 1):
        acc = sumset(acc, A)
    return acc


def negate(A: Subset) -> Subset:
    return finite_subset(vec_neg(a) for a in A)


def translate(x: Vec, A: Subset) -> Subset:
    x = as_vec(x)
    return finite_subset(vec_add(x, a) for a in A)


def difference_set(A: Subset, B: Subset) -> Subset:
    """All pairwise a - b for a in A, b in B."""
    return finite_subset(vec_sub(a, b) for a in A for b in B)


def subset_union(A: Subset, B: Subset) -> Subset:
    return finite_subset(tuple(A) + tuple(B))


# ---------------------------------------------------------------------------
# exact linear algebra helper

def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / prow[c]
                m[i] = [a - f * b for a, b in zip(m[i], prow)]
        r += 1
        if r == len(m):
            break
    return r


# ---------------------------------------------------------------------------
# cone kinds

class OrderedGroup:
    """A rank-d abelian group Z^d with a decidable positive cone."""

    rank: int

    def contains(self, v: Vec) -> bool:
        """Positive-cone membership: v >= 0."""
        raise NotImplementedError

    def leq(self, a: Vec, b: Vec) -> bool:
        a, b = as_vec(a), as_vec(b)
        self.check_rank(a)
        self.check_rank(b)
        return self.contains(vec_sub(b, a))

    def check_rank(self, v: Vec) -> None:
        if len(v) != self.rank:
            raise DimensionError(
                "element %r has rank %d, group has rank %d" % (v, len(v), self.rank)
            )

    def descriptor(self) -> dict:
        raise NotImplementedError

    def opposite(self) -> "OrderedGroup":
        """The same group with the converse order."""
        raise UnsupportedConeError(
            "converse order is not representable for %s" % type(self).__name__
        )

    # the inequality rows defining the cone, for cones cut out by
    # finitely many homogeneous linear inequalities; None otherwise
    def inequality_rows(self) -> Optional[tuple]:
        return None


@dataclass(frozen=True)
class ProductOrder(OrderedGroup):
    """Componentwise order on Z^d."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ArgumentError("rank must be >= 1")

    def contains(self, v: Vec) -> bool:
        return all(c >= 0 for c in v)

    def descriptor(self) -> dict:
        return {"kind": "product", "rank": self.rank}

    def opposite(self) -> "MatrixOrder":
        neg_id = tuple(
            tuple(-1 if i == j else 0 for j in range(self.rank))
            for i in range(self.rank)
        )
        return MatrixOrder(neg_id)

    def inequality_rows(self) -> tuple:
        return tuple(
            tuple(1 if i == j else 0 for j in range(self.rank))
            for i in range(self.rank)
        )


@dataclass(frozen=True)
class MatrixOrder(OrderedGroup):
    """a >= 0 iff M.a >= 0 componentwise.

    The order is antisymmetric exactly when M has full column rank;
    that is computed exactly at construction and exposed as
    `antisymmetric`.  Rank-deficient matrices give genuine preorders
    (e.g. rows [[1,1]] on Z^2) and are accepted.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ArgumentError("matrix cone needs at least one row and column")
        d = len(rows[0])
        if any(len(r) != d for r in rows):
            raise ArgumentError("matrix rows must have equal length")
        object.__setattr__(self, "_antisym", rational_rank(rows) == d)

    @property
    def rank(self) -> int:
        return len(self.rows[0])

    @property
    def antisymmetric(self) -> bool:
        return self._antisym

    def contains(self, v: Vec) -> bool:
        return all(sum(m * c for m, c in zip(row, v)) >= 0 for row in self.rows)

    def descriptor(self) -> dict:
        return {"kind": "matrix", "rows": [list(r) for r in self.rows]}

    def opposite(self) -> "MatrixOrder":
        return MatrixOrder(tuple(tuple(-x for x in r) for r in self.rows))

    def inequality_rows(self) -> tuple:
        return self.rows


@dataclass(frozen=True)
class SemigroupOrder(OrderedGroup):
    """Rank-1 order: a >= 0 iff a lies in the numerical semigroup
    generated by `gens`, or a = 0.

    Membership is O(1) via the Apery set of the smallest generator,
    computed once by the round-robin method.  Generators with gcd g > 1
    are handled by scaling: a >= 0 iff g | a and a/g lies in the reduced
    semigroup.
    """

    gens: tuple

    def __post_init__(self):
        gens = tuple(sorted({int(g) for g in self.gens}))
        if not gens or gens[0] < 1:
            raise ArgumentError("semigroup generators must be positive integers")
        object.__setattr__(self, "gens", gens)
        g = math.gcd(*gens)
        reduced = tuple(x // g for x in gens)
        object.__setattr__(self, "_gcd", g)
        object.__setattr__(self, "_apery", _apery_set(reduced))

    @property
    def rank(self) -> int:
        return 1

    @property
    def gcd(self) -> int:
        return self._gcd

    @property
    def frobenius(self) -> int:
        """Frobenius number of the reduced (gcd-1) semigroup; -1 if none."""
        return max(self._apery) - min(self.gens) // self._gcd

    @property
    def reach(self) -> int:
        """Least r >= 0 with: n >= r and gcd | n imply n in the cone."""
        return self._gcd * (self.frobenius + 1)

    def contains(self, v: Vec) -> bool:
        (n,) = v
        if n == 0:
            return True
        if n < 0 or n % self._gcd:
            return False
        n //= self._gcd
        return n >= self._apery[n % len(self._apery)]

    def descriptor(self) -> dict:
        return {"kind": "semigroup", "gens": list(self.gens)}


def _apery_set(gens: tuple) -> tuple:
    """Minimal semigroup element per residue class mod min(gens).

    Round-robin relaxation; requires gcd(gens) = 1 so every class is
    reachable.
    """
    n1 = min(gens)
    INF = None
    apery = [INF] * n1
    apery[0] = 0
    changed = True
    while changed:
        changed = False
        for g in gens:
            for r in range(n1):
                base = apery[r]
                if base is INF:
                    continue
                val = base + g
                r2 = val % n1
                if apery[r2] is INF or val < apery[r2]:
                    apery[r2] = val
                    changed = True
    if any(a is INF for a in apery):
        raise ArgumentError("generators do not span all residues (gcd != 1)")
    return tuple(apery)


@dataclass(frozen=True)
class TrivialOrder(OrderedGroup):
    """The discrete order: a >= 0 iff a = 0."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ArgumentError("rank must be >= 1")

    def contains(self, v: Vec) -> bool:
        return all(c == 0 for c in v)

    def descriptor(self) -> dict:
        return {"kind": "trivial", "rank": self.rank}

    def inequality_rows(self) -> tuple:
        # v = 0 as the inequalities v >= 0 and -v >= 0; full column rank
        eye = [
            tuple(1 if i == j else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]
        return tuple(eye + [tuple(-x for x in r) for r in eye])


def leq(G: OrderedGroup, a: Vec, b: Vec) -> bool:
    """b - a lies in the positive cone of G."""
    return G.leq(a, b)


def group_from_descriptor(desc: dict) -> OrderedGroup:
    kind = desc.get("kind")
    if kind == "product":
        return ProductOrder(int(desc["rank"]))
    if kind == "matrix":
        return MatrixOrder(tuple(tuple(r) for r in desc["rows"]))
    if kind == "semigroup":
        return SemigroupOrder(tuple(desc["gens"]))
    if kind == "trivial":
        return TrivialOrder(int(desc["rank"]))
    raise ArgumentError("unknown group kind: %r" % (kind,))


# ---------------------------------------------------------------------------
# Lorenzen-Clifford-Dieudonne condition

def lcd_condition_violation(
    G: OrderedGroup, search_box: int = 10, n_max: int = 6
) -> Optional[tuple]:
    """Search for (a, n) with 2 <= n <= n_max, 0 <= n*a but not 0 <= a.

    Matrix/product cones can never violate the condition (M.(na) >= 0
    iff M.a >= 0 over the rationals) and the trivial order forces
    n*a = 0 => a = 0, so those kinds return None without scanning.
    """
    if search_box < 1 or n_max < 1:
        raise ArgumentError("search_box and n_max must be >= 1")
    if isinstance(G, (ProductOrder, MatrixOrder, TrivialOrder)):
        return None
    if isinstance(G, SemigroupOrder):
        # n*a >= 0 needs a >= 0, so only positive a can violate
        for a in range(1, search_box + 1):
            if G.contains((a,)):
                continue
            for n in range(2, n_max + 1):
                if G.contains((n * a,)):
                    return ((a,), n)
        return None
    raise UnsupportedConeError("unknown cone kind %s" % type(G).__name__)
