"""The monoid of ideals of a single-conclusion entailment relation.

Finite subsets, compared by "A entails every element of B", form a
preordered monoid under sumset addition; union is the meet.  A
MeetTerm is a canonical (irredundant) representative of a class.  The
Property-Gamma search hunts for cancellativity failures
A + X <= b + X without A |> b; relations that fail it cannot embed in
their Grothendieck lattice-group.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import _kernels
from .decision import Decision, no, unknown, yes
from .entailment import DedekindSI, FinestSI, RelationHandle
from .errors import ArgumentError, BoundedRelationError
from .groups import (
    Subset,
    Vec,
    finite_subset,
    subset_union,
    sumset,
    translate,
    vec_add,
    vec_scale,
    vec_sub,
    zero,
)
from .sampling import sample_subset, sample_vec


def preorder_leq(rel: RelationHandle, A, B) -> Decision:
    """A <= B in the ideal preorder: A |> b for every b in B."""
    A = finite_subset(A)
    B = finite_subset(B)
    per_element = []
    for b in B:
        d = rel.entails(A, b)
        if d.is_no:
            return no()
        if d.is_unknown:
            return unknown(d.bound_used)
        per_element.append({"b": list(b), "witness": d.witness})
    return yes({"kind": "preorder", "per_element": per_element})


def _dominance_order(rel: RelationHandle):
    """Orders where A |> b is plain componentwise dominance by some
    element, so the canonical form is exactly the set of minimal
    elements (computed by the compiled kernel)."""
    from .domains import PolyRing
    from .groups import ProductOrder

    if isinstance(rel, FinestSI) and isinstance(rel.group, ProductOrder):
        return rel.group
    if isinstance(rel, DedekindSI) and isinstance(rel.domain, PolyRing):
        return rel.domain.divisibility_group()
    return None


@dataclass(frozen=True)
class MeetTerm:
    """Canonical representative: no support element is entailed by the
    others (when the support has at least two elements)."""

    rel: RelationHandle
    support: Subset


def canonicalize(rel: RelationHandle, A) -> MeetTerm:
    """Greedily drop, in canonical scan order, elements entailed by the
    rest.  One forward pass suffices: entailment is monotone in the
    antecedent, so shrinking the set never makes an element newly
    removable."""
    elems = list(finite_subset(A))
    if len(elems) >= 2 and _dominance_order(rel) is not None:
        mask = _kernels.minimal_mask(elems)
        return MeetTerm(rel, tuple(e for e, keep in zip(elems, mask) if keep))
    i = 0
    while len(elems) >= 2 and i < len(elems):
        rest = tuple(elems[:i] + elems[i + 1:])
        d = rel.entails(rest, elems[i])
        if d.is_unknown:
            raise BoundedRelationError(
                "canonicalisation hit an undecided instance",
                query={"A": rest, "b": elems[i], "bound": d.bound_used},
            )
        if d.is_yes:
            elems.pop(i)
        else:
            i += 1
    return MeetTerm(rel, tuple(elems))


def _same_rel(S: MeetTerm, T: MeetTerm) -> RelationHandle:
    if S.rel.key() != T.rel.key():
        raise ArgumentError("meet terms live over different relations")
    return S.rel


def ideal_add(S: MeetTerm, T: MeetTerm) -> MeetTerm:
    rel = _same_rel(S, T)
    return canonicalize(rel, sumset(S.support, T.support))


def ideal_meet(S: MeetTerm, T: MeetTerm) -> MeetTerm:
    rel = _same_rel(S, T)
    return canonicalize(rel, subset_union(S.support, T.support))


def term_eq(S: MeetTerm, T: MeetTerm) -> Decision:
    """Equality in the quotient: mutual preorder."""
    rel = _same_rel(S, T)
    d1 = preorder_leq(rel, S.support, T.support)
    if not d1.is_yes:
        return d1
    d2 = preorder_leq(rel, T.support, S.support)
    if not d2.is_yes:
        return d2
    return yes({"kind": "term-eq", "forward": d1.witness, "backward": d2.witness})


# ---------------------------------------------------------------------------
# Property Gamma

def _positive_part(v: Vec) -> Vec:
    return tuple(max(c, 0) for c in v)


def gamma_counterexample_search(
    rel: RelationHandle,
    box: int = 6,
    set_size: int = 3,
    trials: int = 2000,
    seed: int = 0,
) -> Optional[tuple]:
    """Search for (A, X, b) with A + X <= b + X in the ideal preorder
    yet A |> b false.  None after the budget means no failure found,
    which is evidence of cancellativity, not proof.

    A deterministic structured phase runs first: symmetric pairs
    {v, -v}, then singletons and small pairs, with auxiliary sets X
    drawn from sums, positive parts and difference progressions of the
    candidates, smallest X first.  Random search spends any remaining
    budget.
    """
    rank = rel.group.rank
    budget = [trials]

    def attempt(A: Subset, X: Subset, b: Vec) -> bool:
        if budget[0] <= 0:
            return False
        budget[0] -= 1
        dl = preorder_leq(rel, sumset(A, X), translate(b, X))
        return dl.is_yes

    # structured phase: collect (A, b) with A |> b false
    cands = []
    if rank == 1:
        elems = [(v,) for v in range(-2, box + 1)]
        A_pool = [(e,) for e in elems]
        A_pool += [
            (e1, e2) for e1 in elems for e2 in elems if e1 < e2
        ][:40]
        b_pool = elems
    else:
        small = min(box, 2)
        coords = range(-small, small + 1)
        pts = [()]
        for _ in range(rank):
            pts = [p + (c,) for p in pts for c in coords]
        pts.sort(key=lambda v: (sum(abs(c) for c in v), v))
        vecs = pts[:25]
        A_pool = [
            finite_subset((v, tuple(-c for c in v)))
            for v in vecs
            if any(c for c in v)
        ]
        A_pool += [(v,) for v in vecs]
        b_pool = vecs
    seen_ab = set()
    for A in A_pool:
        A = finite_subset(A)
        hits = 0
        for b in b_pool:
            if len(cands) >= 120 or hits >= 6:
                break
            if (A, b) in seen_ab:
                continue
            seen_ab.add((A, b))
            d = rel.entails(A, b)
            if not d.is_no:
                continue
            # auxiliary pool, best guesses first, deduped in order
            raw = [zero(rank)]
            raw += list(A) + [b]
            raw += [_positive_part(a) for a in A]
            raw += [vec_sub(b, a) for a in A]
            raw += [vec_add(a1, a2) for a1 in A for a2 in A if a1 <= a2]
            raw += [vec_add(a, b) for a in A]
            raw += [vec_scale(2, vec_sub(b, a)) for a in A]
            pool = []
            for v in raw:
                if v not in pool:
                    pool.append(v)
            cands.append((A, b, pool[:8]))
            hits += 1
    # antipodal pairs translated to the base point are the classic
    # failure pattern; try them first
    cands.sort(key=lambda c: 0 if (
        len(c[0]) == 2 and c[1] == zero(rank)
        and c[0][1] == tuple(-x for x in c[0][0])
    ) else 1)

    for size in range(1, set_size + 1):
        for A, b, pool in cands:
            if budget[0] <= 0:
                break
            for X in combinations(pool, size):
                if attempt(A, X, b):
                    return (A, finite_subset(X), b)
                if budget[0] <= 0:
                    break

    rng = random.Random(seed)
    while budget[0] > 0:
        A = sample_subset(rng, rank, box, max_size=2)
        b = sample_vec(rng, rank, box)
        if not rel.entails(A, b).is_no:
            budget[0] -= 1
            continue
        X = sample_subset(rng, rank, box, max_size=set_size)
        if attempt(A, X, b):
            return (A, X, b)
    return None
