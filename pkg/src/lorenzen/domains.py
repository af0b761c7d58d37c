"""Monomial integral domains and their ideal theory.

A monomial domain is described by the additive monoid of its monomial
exponents: the nonnegative orthant for a polynomial ring, a numerical
semigroup for a subring of k[t], the group g*Z for a Laurent ring, and
the orthant extended by one forced exponent.  Fractional monomial
ideals are finite sets of (possibly negative) exponent vectors.

Integral dependence of b over <a_1..a_m> has one witness shape in every
domain: integers k >= 1 and q >= 0 with sum(q) = k such that
s := k*b - sum q_i a_i lies in the monoid.  Polynomial rings decide it
by exact rational feasibility (Newton polyhedron), semigroup rings by a
closed form cross-checked against a k-fold sumset search, Laurent rings
by direct construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .decision import Decision, no, yes
from .errors import (
    ArgumentError,
    DimensionError,
    InternalCheckError,
    UnsupportedDomainError,
)
from .feasibility import (
    FeasibilityProblem,
    feasible_cached,
    integer_witness,
)
from .groups import (
    OrderedGroup,
    ProductOrder,
    SemigroupOrder,
    Subset,
    Vec,
    as_vec,
    finite_subset,
    sumset,
    vec_scale,
    vec_sub,
    zero,
)

_CLOSURE_POINT_CAP = 200_000


# ---------------------------------------------------------------------------
# domain kinds

class MonomialDomain:
    rank: int

    def monoid_contains(self, v: Vec) -> bool:
        raise NotImplementedError

    def divisibility_group(self) -> OrderedGroup:
        """The exponent group preordered by divisibility (a <= b iff
        b - a lies in the monoid)."""
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def check_rank(self, v: Vec) -> None:
        if len(v) != self.rank:
            raise DimensionError(
                "exponent %r has rank %d, domain has rank %d"
                % (v, len(v), self.rank)
            )


@dataclass(frozen=True)
class PolyRing(MonomialDomain):
    """k[t_1..t_d]; exponents in Z^d, monoid = nonnegative orthant."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ArgumentError("rank must be >= 1")

    def monoid_contains(self, v: Vec) -> bool:
        return all(c >= 0 for c in v)

    def divisibility_group(self) -> OrderedGroup:
        return ProductOrder(self.rank)

    def descriptor(self) -> dict:
        return {"kind": "polyring", "rank": self.rank}


@dataclass(frozen=True)
class SemigroupRing(MonomialDomain):
    """k[t^s : s in S] for a numerical semigroup S; generators are
    normalised to the minimal generating set."""

    gens: tuple

    def __post_init__(self):
        order = SemigroupOrder(tuple(self.gens))
        object.__setattr__(self, "gens", _minimal_semigroup_gens(order.gens))
        object.__setattr__(self, "_order", SemigroupOrder(self.gens))

    @property
    def rank(self) -> int:
        return 1

    @property
    def order(self) -> SemigroupOrder:
        return self._order

    def monoid_contains(self, v: Vec) -> bool:
        return self._order.contains(v)

    def divisibility_group(self) -> OrderedGroup:
        return self._order

    def descriptor(self) -> dict:
        return {"kind": "semigroup", "gens": list(self.gens)}


def _minimal_semigroup_gens(gens: tuple) -> tuple:
    """Drop generators representable by the others."""
    kept = list(gens)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for g in list(kept):
            others = tuple(x for x in kept if x != g)
            if others and SemigroupOrder(others).contains((g,)):
                kept.remove(g)
                changed = True
                break
    return tuple(kept)


@dataclass(frozen=True)
class LaurentRing(MonomialDomain):
    """k[t^g, t^-g]; the exponent monoid is the group g*Z."""

    step: int

    def __post_init__(self):
        if self.step < 1:
            raise ArgumentError("step must be >= 1")

    @property
    def rank(self) -> int:
        return 1

    def monoid_contains(self, v: Vec) -> bool:
        (n,) = v
        return n % self.step == 0

    def divisibility_group(self) -> OrderedGroup:
        return _DivisibilityOrder(self)

    def descriptor(self) -> dict:
        return {"kind": "laurent", "step": self.step}


@dataclass(frozen=True)
class ForcedPolyRing(MonomialDomain):
    """Polynomial ring with one forced exponent x: the monoid is
    N^d + N*x.  Membership is exact: v is a member iff v - n*x lies in
    the orthant for some integer n >= 0, a one-variable interval
    condition."""

    rank: int
    x: tuple

    def __post_init__(self):
        x = as_vec(self.x)
        object.__setattr__(self, "x", x)
        if self.rank < 1 or self.rank > 2:
            raise UnsupportedDomainError(
                "forced polynomial domains support rank 1 and 2 only"
            )
        if len(x) != self.rank:
            raise DimensionError("forced exponent has wrong rank")

    def monoid_contains(self, v: Vec) -> bool:
        lo, hi = 0, None  # admissible n: v - n*x >= 0
        for vi, xi in zip(v, self.x):
            if xi == 0:
                if vi < 0:
                    return False
            elif xi > 0:
                bound = vi // xi  # floor: n*xi <= vi
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = max(lo, -(vi // -xi))  # ceil(vi/xi) for xi < 0
        if hi is None:
            return True
        return lo <= hi

    def divisibility_group(self) -> OrderedGroup:
        return _DivisibilityOrder(self)

    def descriptor(self) -> dict:
        return {"kind": "forced-polyring", "rank": self.rank, "x": list(self.x)}


@dataclass(frozen=True)
class _DivisibilityOrder(OrderedGroup):
    """Preorder wrapper: a <= b iff b - a is in the domain's monoid."""

    domain: MonomialDomain

    @property
    def rank(self) -> int:
        return self.domain.rank

    def contains(self, v: Vec) -> bool:
        return self.domain.monoid_contains(v)

    def descriptor(self) -> dict:
        return {"kind": "divisibility", "domain": self.domain.descriptor()}


def domain_from_descriptor(desc: dict) -> MonomialDomain:
    kind = desc.get("kind")
    if kind == "polyring":
        return PolyRing(int(desc["rank"]))
    if kind == "semigroup":
        return SemigroupRing(tuple(desc["gens"]))
    if kind == "laurent":
        return LaurentRing(int(desc["step"]))
    if kind == "forced-polyring":
        return ForcedPolyRing(int(desc["rank"]), tuple(desc["x"]))
    raise ArgumentError("unknown domain kind: %r" % (kind,))


# ---------------------------------------------------------------------------
# monomial ideals

@dataclass(frozen=True)
class MonomialIdeal:
    """Fractional monomial ideal, generated by exponent vectors.
    Generators are canonical (sorted) and irredundant: no generator
    divides another."""

    domain: MonomialDomain
    gens: Subset

    def member(self, b) -> bool:
        return ideal_member(self, b)


def monomial_ideal(domain: MonomialDomain, gens) -> MonomialIdeal:
    sub = finite_subset(gens)
    for g in sub:
        domain.check_rank(g)
    return MonomialIdeal(domain, _irredundant(domain, sub))


def _irredundant(domain: MonomialDomain, gens: Subset) -> Subset:
    """Keep the divisibility-minimal generators.

    In a preorder two generators can divide each other; the earlier one
    in canonical order is kept so the result is deterministic.
    """
    if len(gens) > 1 and isinstance(domain, PolyRing):
        mask = _kernels.minimal_mask(gens)
        return tuple(g for g, keep in zip(gens, mask) if keep)
    kept = []
    for i, g in enumerate(gens):
        dominated = False
        for j, h in enumerate(gens):
            if i == j:
                continue
            if domain.monoid_contains(vec_sub(g, h)):
                # h divides g; drop g unless they are mutually
                # divisible and g comes first
                if not (domain.monoid_contains(vec_sub(h, g)) and i < j):
                    dominated = True
                    break
        if not dominated:
            kept.append(g)
    return tuple(kept)


def ideal_member(I: MonomialIdeal, b) -> bool:
    """b lies in the fractional ideal: some generator divides it."""
    b = as_vec(b)
    I.domain.check_rank(b)
    return any(I.domain.monoid_contains(vec_sub(b, a)) for a in I.gens)


# ---------------------------------------------------------------------------
# integral dependence

def _check_integrality_witness(
    I: MonomialIdeal, b: Vec, k: int, q: tuple, s: Vec
) -> None:
    if k < 1 or len(q) != len(I.gens) or any(x < 0 for x in q):
        raise InternalCheckError("malformed integrality witness")
    if sum(q) != k:
        raise InternalCheckError("integrality witness: sum(q) != k")
    acc = vec_scale(k, b)
    for qi, a in zip(q, I.gens):
        acc = vec_sub(acc, vec_scale(qi, a))
    if acc != s or not I.domain.monoid_contains(s):
        raise InternalCheckError("integrality witness: slack not in monoid")


def integral_dependence(I: MonomialIdeal, b) -> Decision:
    """Is b integral over the ideal: some power k*b equals a k-fold
    generator combination plus a monoid element?

    Witness: {"k": k, "q": [...], "s": slack vector}.
    """
    b = as_vec(b)
    I.domain.check_rank(b)
    dom = I.domain
    if isinstance(dom, PolyRing):
        return _integral_poly(I, b)
    if isinstance(dom, SemigroupRing):
        return _integral_semigroup(I, b)
    if isinstance(dom, LaurentRing):
        return _integral_laurent(I, b)
    raise UnsupportedDomainError(
        "integral dependence is not supported over %s" % type(dom).__name__
    )


def _witness(I, b, k, q, s) -> Decision:
    _check_integrality_witness(I, b, k, tuple(q), s)
    return yes({"kind": "integrality", "k": k, "q": list(q), "s": list(s)})


def _integral_poly(I: MonomialIdeal, b: Vec) -> Decision:
    # b in conv(gens) + orthant, i.e. some convex combination of the
    # generators is componentwise <= b
    columns = tuple(vec_sub(a, b) for a in I.gens)
    p = feasible_cached(FeasibilityProblem(columns, ProductOrder(I.domain.rank)))
    if p is None:
        return no()
    q = integer_witness(p)
    k = sum(q)
    s = vec_scale(k, b)
    for qi, a in zip(q, I.gens):
        s = vec_sub(s, vec_scale(qi, a))
    return _witness(I, b, k, q, s)


def _integral_semigroup(I: MonomialIdeal, b: Vec) -> Decision:
    # closed form: integral iff b >= min(gens) in the usual integer
    # order; see the k-fold search below for the independent derivation
    order = I.domain.order
    (bv,) = b
    astar = min(a for (a,) in I.gens)
    idx = I.gens.index((astar,))
    if bv < astar:
        return no()
    n = scaling_to_monoid(order, bv - astar)
    q = [0] * len(I.gens)
    q[idx] = n
    s = (n * (bv - astar),)
    result = _witness(I, b, n, q, s)
    if bv > astar:
        # cross-check against the determinant-trick search
        kmax = order.gcd * (
            -(-(order.reach + 1) // max(1, bv - astar))
        ) + 1
        found = kfold_integral_search(I, b, kmax)
        if found is None:
            raise InternalCheckError(
                "semigroup closed form says integral but k-fold search "
                "found nothing for b=%d up to k=%d" % (bv, kmax)
            )
    return result


def scaling_to_monoid(order: SemigroupOrder, r: int) -> int:
    """Least n >= 1 with n*r in the monoid (exists for r >= 0)."""
    if r == 0:
        return 1
    cap = order.gcd * (order.reach + 1) + order.gcd
    for n in range(1, cap + 1):
        if order.contains((n * r,)):
            return n
    raise InternalCheckError("no scaling found for r=%d" % r)


def _integral_laurent(I: MonomialIdeal, b: Vec) -> Decision:
    # the monoid is the group step*Z, so a multiple of any generator
    # difference always lands in it
    g = I.domain.step
    (a0,) = I.gens[0]
    r = b[0] - a0
    k = 1 if r % g == 0 else g // math.gcd(abs(r) % g, g)
    q = [0] * len(I.gens)
    q[0] = k
    return _witness(I, b, k, q, (k * r,))


def kfold_integral_search(I: MonomialIdeal, b, kmax: int) -> Optional[dict]:
    """Independent oracle: search k = 1..kmax for q >= 0, sum q = k,
    with k*b - sum q_i a_i in the monoid.  Returns the witness dict or
    None.  Exhaustive over compositions, so only usable for small kmax."""
    b = as_vec(b)
    I.domain.check_rank(b)
    gens = I.gens
    for k in range(1, kmax + 1):
        for q in _compositions(k, len(gens)):
            s = vec_scale(k, b)
            for qi, a in zip(q, gens):
                s = vec_sub(s, vec_scale(qi, a))
            if I.domain.monoid_contains(s):
                return {"kind": "integrality", "k": k, "q": list(q), "s": list(s)}
    return None


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# integral closure

def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """The ideal of all elements integral over I, presented by its
    divisibility-minimal generators."""
    dom = I.domain
    if isinstance(dom, SemigroupRing):
        return _closure_semigroup(I)
    if isinstance(dom, PolyRing):
        return _closure_poly(I)
    raise UnsupportedDomainError(
        "integral closure is not supported over %s" % type(dom).__name__
    )


def _closure_semigroup(I: MonomialIdeal) -> MonomialIdeal:
    # the closure is { b : b >= min gens }; its divisibility-minimal
    # generators all lie within reach + step of the minimum
    order = I.domain.order
    astar = min(a for (a,) in I.gens)
    hi = astar + max(order.reach, 1) + order.gcd  # exclusive
    members = list(range(astar, hi))
    gens = [
        b
        for i, b in enumerate(members)
        if not any(order.contains((b - c,)) for c in members[:i])
    ]
    return monomial_ideal(I.domain, [(g,) for g in gens])


def _closure_poly(I: MonomialIdeal) -> MonomialIdeal:
    # minimal lattice points of conv(gens) + orthant; all of them lie
    # in the coordinate bounding box of the generators
    d = I.domain.rank
    lo = [min(g[i] for g in I.gens) for i in range(d)]
    hi = [max(g[i] for g in I.gens) for i in range(d)]
    npoints = 1
    for a, b in zip(lo, hi):
        npoints *= b - a + 1
    if npoints > _CLOSURE_POINT_CAP:
        raise ArgumentError(
            "closure enumeration needs %d lattice points (cap %d)"
            % (npoints, _CLOSURE_POINT_CAP)
        )
    box = _box_points(lo, hi)
    inside = [p for p in box if integral_dependence(I, p).is_yes]
    mask = _kernels.minimal_mask(inside)
    return monomial_ideal(
        I.domain, [p for p, keep in zip(inside, mask) if keep]
    )


def _box_points(lo, hi):
    pts = [()]
    for a, b in zip(lo, hi):
        pts = [p + (c,) for p in pts for c in range(a, b + 1)]
    return pts


# ---------------------------------------------------------------------------
# divisors

@dataclass(frozen=True)
class Divisor:
    """Formal difference of two integrally closed monomial ideals."""

    pos: MonomialIdeal
    neg: MonomialIdeal

    @property
    def domain(self) -> MonomialDomain:
        return self.pos.domain


def _closed(domain: MonomialDomain, gens) -> MonomialIdeal:
    return integral_closure(monomial_ideal(domain, gens))


def basic_divisor(domain: MonomialDomain, A) -> Divisor:
    """The divisor of the ideal generated by A: closure(A) - closure(0)."""
    return Divisor(
        _closed(domain, A), _closed(domain, [zero(domain.rank)])
    )


def _same_domain(D1: Divisor, D2: Divisor) -> MonomialDomain:
    if D1.domain != D2.domain:
        raise ArgumentError("divisors live over different domains")
    return D1.domain


def divisor_add(D1: Divisor, D2: Divisor) -> Divisor:
    dom = _same_domain(D1, D2)
    return Divisor(
        _closed(dom, sumset(D1.pos.gens, D2.pos.gens)),
        _closed(dom, sumset(D1.neg.gens, D2.neg.gens)),
    )


def divisor_neg(D: Divisor) -> Divisor:
    return Divisor(D.neg, D.pos)


def divisor_meet(D1: Divisor, D2: Divisor) -> Divisor:
    # bring to the common denominator neg1 + neg2, then the meet is the
    # closure of the union of the numerators
    dom = _same_domain(D1, D2)
    n1p2 = sumset(D2.pos.gens, D1.neg.gens)
    n2p1 = sumset(D1.pos.gens, D2.neg.gens)
    return Divisor(
        _closed(dom, n2p1 + n1p2),
        _closed(dom, sumset(D1.neg.gens, D2.neg.gens)),
    )


def _closure_contains(dom, big_gens, small_gens) -> bool:
    """closure(<big>) contains closure(<small>): every generator of the
    small ideal is integral over the big one.  No closure enumeration
    is needed."""
    big = monomial_ideal(dom, big_gens)
    return all(integral_dependence(big, y).is_yes for y in small_gens)


def divisor_leq(D1: Divisor, D2: Divisor) -> bool:
    """D1 <= D2, realised as reverse containment of closed ideals:
    closure(pos1 + neg2) contains closure(pos2 + neg1)."""
    dom = _same_domain(D1, D2)
    left = sumset(D1.pos.gens, D2.neg.gens)
    right = sumset(D2.pos.gens, D1.neg.gens)
    return _closure_contains(dom, left, right)


def divisor_eq(D1: Divisor, D2: Divisor) -> bool:
    return divisor_leq(D1, D2) and divisor_leq(D2, D1)


# ---------------------------------------------------------------------------
# Macaulay cancellation

def macaulay_check(
    domain: MonomialDomain, trials: int, box: int, seed: int
) -> dict:
    """Sample ideals a, b, c and assert: closure(a+b) contains
    closure(a+c) implies closure(b) contains closure(c)."""
    import random

    rng = random.Random(seed)
    d = domain.rank
    failures = []
    hits = 0
    for _ in range(trials):
        a, b, c = (
            finite_subset(
                tuple(rng.randint(0, box) for _ in range(d))
                for _ in range(rng.randint(1, 3))
            )
            for _ in range(3)
        )
        if not _closure_contains(domain, sumset(a, b), sumset(a, c)):
            continue
        hits += 1
        if not _closure_contains(domain, b, c):
            failures.append({"a": a, "b": b, "c": c})
    return {
        "name": "macaulay-cancellation",
        "trials": trials,
        "antecedent_hits": hits,
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# domain forcing

def dedekind_forced(domain: MonomialDomain, x) -> MonomialDomain:
    """The monomial domain whose monoid is generated by the current
    monoid and x (the Dedekind system of the ring extension R[t^x])."""
    x = as_vec(x)
    domain.check_rank(x)
    if domain.monoid_contains(x):
        return domain
    if isinstance(domain, SemigroupRing):
        (n,) = x
        if n > 0:
            return SemigroupRing(domain.gens + (n,))
        # both signs now occur, so the monoid collapses to gcd * Z
        return LaurentRing(math.gcd(*domain.gens, -n))
    if isinstance(domain, LaurentRing):
        (n,) = x
        return LaurentRing(math.gcd(domain.step, abs(n)))
    if isinstance(domain, PolyRing):
        return ForcedPolyRing(domain.rank, x)
    raise UnsupportedDomainError(
        "forcing is not supported over %s" % type(domain).__name__
    )
