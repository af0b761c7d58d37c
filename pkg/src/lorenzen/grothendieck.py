"""Grothendieck lattice-ordered group of a cancellative meet-monoid.

Elements are formal differences of canonical meet terms; equality and
order are decided through the two-sided ideal preorder, never by
uniqueness of the difference representation.  The meet of differences
follows the classical construction ((pos1+neg2) meet (pos2+neg1)) -
(neg1+neg2), join is the De Morgan dual.  Building terms over a
relation whose ideal monoid is not cancellative would silently produce
a wrong lattice, so term evaluation first hunts for a cancellativity
counterexample and refuses the relation if one turns up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .decision import Decision, no, unknown, yes
from .entailment import RelationHandle
from .errors import ArgumentError, CancellativityError, MalformedInputError
from .groups import Vec, as_vec, zero
from .meetmonoid import (
    MeetTerm,
    canonicalize,
    gamma_counterexample_search,
    ideal_add,
    ideal_meet,
    preorder_leq,
)


@dataclass(frozen=True)
class FormalDifference:
    """pos - neg, both canonical meet terms over one relation."""

    pos: MeetTerm
    neg: MeetTerm

    def __post_init__(self):
        if self.pos.rel.key() != self.neg.rel.key():
            raise ArgumentError("formal difference mixes two relations")

    @property
    def rel(self) -> RelationHandle:
        return self.pos.rel


def from_element(rel: RelationHandle, g) -> FormalDifference:
    g = as_vec(g)
    rel.group.check_rank(g)
    origin = zero(rel.group.rank)
    return FormalDifference(canonicalize(rel, (g,)), canonicalize(rel, (origin,)))


def _pair(d1: FormalDifference, d2: FormalDifference) -> RelationHandle:
    if d1.rel.key() != d2.rel.key():
        raise ArgumentError("formal differences live over different relations")
    return d1.rel


def groth_add(d1: FormalDifference, d2: FormalDifference) -> FormalDifference:
    _pair(d1, d2)
    return FormalDifference(ideal_add(d1.pos, d2.pos), ideal_add(d1.neg, d2.neg))


def groth_neg(d: FormalDifference) -> FormalDifference:
    return FormalDifference(d.neg, d.pos)


def groth_meet(d1: FormalDifference, d2: FormalDifference) -> FormalDifference:
    _pair(d1, d2)
    cross1 = ideal_add(d1.pos, d2.neg)
    cross2 = ideal_add(d2.pos, d1.neg)
    return FormalDifference(
        ideal_meet(cross1, cross2),
        ideal_add(d1.neg, d2.neg),
    )


def groth_join(d1: FormalDifference, d2: FormalDifference) -> FormalDifference:
    return groth_neg(groth_meet(groth_neg(d1), groth_neg(d2)))


def groth_abs(d: FormalDifference) -> FormalDifference:
    return groth_join(d, groth_neg(d))


def groth_leq(d1: FormalDifference, d2: FormalDifference) -> Decision:
    """d1 <= d2 iff pos1+neg2 <= pos2+neg1 in the ideal preorder."""
    rel = _pair(d1, d2)
    left = ideal_add(d1.pos, d2.neg)
    right = ideal_add(d2.pos, d1.neg)
    return preorder_leq(rel, left.support, right.support)


def groth_eq(d1: FormalDifference, d2: FormalDifference) -> Decision:
    rel = _pair(d1, d2)
    left = ideal_add(d1.pos, d2.neg)
    right = ideal_add(d2.pos, d1.neg)
    fwd = preorder_leq(rel, left.support, right.support)
    if not fwd.is_yes:
        return fwd
    bwd = preorder_leq(rel, right.support, left.support)
    if not bwd.is_yes:
        return bwd
    return yes({"kind": "groth-eq", "forward": fwd.witness, "backward": bwd.witness})


# ---------------------------------------------------------------------------
# lattice terms

@dataclass(frozen=True)
class LatticeTerm:
    """Expression tree: op in {leaf, add, neg, meet, join}; a leaf
    carries a group element, the other nodes carry children."""

    op: str
    children: tuple = ()
    value: Optional[Vec] = None

    def __post_init__(self):
        if self.op == "leaf":
            if self.value is None or self.children:
                raise MalformedInputError("leaf terms carry exactly one element")
        elif self.op == "neg":
            if len(self.children) != 1:
                raise MalformedInputError("neg takes exactly one subterm")
        elif self.op in ("add", "meet", "join"):
            if len(self.children) < 2:
                raise MalformedInputError("%s takes at least two subterms" % self.op)
        else:
            raise MalformedInputError("unknown term operation %r" % self.op)


def leaf(g) -> LatticeTerm:
    return LatticeTerm("leaf", value=as_vec(g))


_OPS = {"add": "add", "neg": "neg", "negate": "neg", "meet": "meet", "join": "join"}


def _tokenize(text: str) -> list:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse(tokens: list, pos: int):
    if pos >= len(tokens):
        raise MalformedInputError("unexpected end of term")
    tok = tokens[pos]
    if tok == ")":
        raise MalformedInputError("unexpected ')'")
    if tok != "(":
        return leaf(_int(tok)), pos + 1
    pos += 1
    if pos >= len(tokens):
        raise MalformedInputError("unterminated '('")
    head = tokens[pos]
    if head in _OPS:
        op = _OPS[head]
        pos += 1
        children = []
        while pos < len(tokens) and tokens[pos] != ")":
            child, pos = _parse(tokens, pos)
            children.append(child)
        if pos >= len(tokens):
            raise MalformedInputError("unterminated '('")
        return LatticeTerm(op, tuple(children)), pos + 1
    # a parenthesised list of integers is a vector leaf
    coords = []
    while pos < len(tokens) and tokens[pos] != ")":
        coords.append(_int(tokens[pos]))
        pos += 1
    if pos >= len(tokens):
        raise MalformedInputError("unterminated '('")
    if not coords:
        raise MalformedInputError("empty leaf vector")
    return leaf(tuple(coords)), pos + 1


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedInputError("expected an integer or operation, got %r" % tok)


def parse_term(text: str) -> LatticeTerm:
    tokens = _tokenize(text)
    if not tokens:
        raise MalformedInputError("empty term")
    term, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise MalformedInputError("trailing input after term: %r" % tokens[pos])
    return term


# ---------------------------------------------------------------------------
# evaluation behind the cancellativity gate

_GAMMA_BUDGET = {"box": 5, "set_size": 3, "trials": 2000, "seed": 0}
_gamma_cache: dict = {}


def cancellativity_gate(rel: RelationHandle) -> None:
    """Raise if a Property-Gamma counterexample is found at the
    configured budget; cache the outcome per relation."""
    key = rel.key()
    if key not in _gamma_cache:
        _gamma_cache[key] = gamma_counterexample_search(rel, **_GAMMA_BUDGET)
    hit = _gamma_cache[key]
    if hit is not None:
        A, X, b = hit
        raise CancellativityError(
            "ideal monoid is not cancellative: A=%r, X=%r, b=%r has "
            "A+X <= b+X in the ideal preorder yet A does not entail b"
            % (list(A), list(X), list(b))
        )


def term_eval(rel: RelationHandle, t: LatticeTerm) -> FormalDifference:
    """Evaluate a lattice term over the Grothendieck lattice-group of
    the relation's ideal monoid."""
    cancellativity_gate(rel)
    return _eval(rel, t)


def _eval(rel: RelationHandle, t: LatticeTerm) -> FormalDifference:
    if t.op == "leaf":
        return from_element(rel, t.value)
    kids = [_eval(rel, c) for c in t.children]
    if t.op == "neg":
        return groth_neg(kids[0])
    folders = {"add": groth_add, "meet": groth_meet, "join": groth_join}
    fn = folders[t.op]
    acc = kids[0]
    for k in kids[1:]:
        acc = fn(acc, k)
    return acc


def regularity_inequality_check(rel: RelationHandle, samples: int = 200,
                                seed: int = 0, box: int = 3) -> dict:
    """(x'+a') meet (y'+b') <= (y'+a') join (x'+b') on random
    quadruples of group elements."""
    import random as _random

    from .sampling import sample_vec

    rank = rel.group.rank
    rng = _random.Random(seed)
    failures = []
    for t in range(samples):
        xp, yp, ap, bp = (from_element(rel, sample_vec(rng, rank, box))
                          for _ in range(4))
        lhs = groth_meet(groth_add(xp, ap), groth_add(yp, bp))
        rhs = groth_join(groth_add(yp, ap), groth_add(xp, bp))
        if not groth_leq(lhs, rhs).is_yes:
            failures.append({
                "x": xp.pos.support, "y": yp.pos.support,
                "a": ap.pos.support, "b": bp.pos.support,
            })
            if len(failures) >= 5:
                break
    return {
        "name": "regularity-inequality",
        "relation": rel.describe(),
        "samples": samples,
        "failures": failures,
    }
