"""Regular entailment relations.

The regularisation of a system of ideals proceeds as if any two group
elements were comparable: A entails B when some auxiliary elements
x_1..x_m make A-B collapse onto 0 under every choice of signs.  Over
the finest system of ideals the result is entailment in the free
lattice-ordered group, decided exactly by rational feasibility: A
entails B iff sum p_ij (a_i - b_j) <= 0 for nonnegative integers p_ij
not all zero.  Pruefer's construction reaches the same relation from
the other side, by searching for a finite X with A + X <= b + X.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .decision import Decision, no, unknown, yes
from .domains import scaling_to_monoid
from .entailment import (
    DedekindSI,
    FinestSI,
    RelationHandle,
    multi_forced_entails,
)
from .errors import DimensionError, InternalCheckError, UnsupportedConeError
from .feasibility import FeasibilityProblem, feasible_cached, integer_witness
from .groups import (
    MatrixOrder,
    OrderedGroup,
    ProductOrder,
    SemigroupOrder,
    Subset,
    TrivialOrder,
    Vec,
    as_vec,
    difference_set,
    finite_subset,
    subset_union,
    sumset,
    translate,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    zero,
)
from .meetmonoid import preorder_leq
from .sampling import sample_positive, sample_subset, sample_vec


@dataclass(frozen=True)
class Sequent:
    """A pair of nonempty finite subsets of a common group."""

    A: Subset
    B: Subset

    def __post_init__(self):
        object.__setattr__(self, "A", finite_subset(self.A))
        object.__setattr__(self, "B", finite_subset(self.B))
        if not self.A or not self.B:
            raise DimensionError("sequent sides must be nonempty")
        if len(self.A[0]) != len(self.B[0]):
            raise DimensionError(
                "sequent sides have ranks %d and %d"
                % (len(self.A[0]), len(self.B[0]))
            )

    @property
    def rank(self) -> int:
        return len(self.A[0])


def sequent(A, B) -> Sequent:
    return Sequent(finite_subset(A), finite_subset(B))


def _columns(s: Sequent) -> tuple:
    # row-major: column i*|B|+j is a_i - b_j
    return tuple(vec_sub(a, b) for a in s.A for b in s.B)


def _p_matrix(s: Sequent, q: tuple) -> list:
    nb = len(s.B)
    return [list(q[i * nb:(i + 1) * nb]) for i in range(len(s.A))]


def check_p_matrix(G: OrderedGroup, s: Sequent, p) -> None:
    """Validate a p-matrix witness; raises on any defect."""
    if len(p) != len(s.A) or any(len(row) != len(s.B) for row in p):
        raise InternalCheckError("p-matrix shape does not match the sequent")
    total = zero(s.rank)
    weight = 0
    for i, a in enumerate(s.A):
        for j, b in enumerate(s.B):
            pij = int(p[i][j])
            if pij < 0:
                raise InternalCheckError("p-matrix entry p[%d][%d] negative" % (i, j))
            weight += pij
            total = vec_add(total, vec_scale(pij, vec_sub(a, b)))
    if weight == 0:
        raise InternalCheckError("p-matrix is identically zero")
    if not G.leq(total, zero(s.rank)):
        raise InternalCheckError(
            "p-matrix combination %r is not below zero in the cone" % (total,)
        )


def free_entails(G: OrderedGroup, s: Sequent) -> Decision:
    """Entailment in the free lattice-ordered group over (G, <=).

    Yes iff sum p_ij (a_i - b_j) <= 0 has a nonnegative nonzero integer
    solution.  Product and Matrix cones go through exact rational
    feasibility; Semigroup cones through a closed form; the trivial
    order through feasibility over its defining inequalities.
    """
    for v in s.A + s.B:
        G.check_rank(v)
    if isinstance(G, SemigroupOrder):
        return _free_semigroup(G, s)
    if isinstance(G, TrivialOrder):
        cone = MatrixOrder(G.inequality_rows())
    elif isinstance(G, (ProductOrder, MatrixOrder)):
        cone = G
    else:
        raise UnsupportedConeError(
            "free entailment needs a Product, Matrix, Semigroup or Trivial cone"
        )
    prob = FeasibilityProblem(_columns(s), cone)
    p = feasible_cached(prob)
    if p is None:
        return no()
    q = integer_witness(p)
    matrix = _p_matrix(s, q)
    check_p_matrix(G, s, matrix)
    return yes({"kind": "p-matrix", "p": matrix})


def _free_semigroup(G: SemigroupOrder, s: Sequent) -> Decision:
    """Closed form over a numerical-semigroup cone: with a* = min A and
    b* = max B (usual integer order), any nonnegative combination of
    the a_i - b_j is at least a* - b* times its weight, and the cone
    lies in the naturals, so entailment holds iff a* <= b*; then some
    multiple n(b* - a*) lands in the semigroup."""
    ai = min(range(len(s.A)), key=lambda i: s.A[i][0])
    bj = max(range(len(s.B)), key=lambda j: s.B[j][0])
    diff = s.B[bj][0] - s.A[ai][0]
    if diff < 0:
        return no()
    n = scaling_to_monoid(G, diff)
    matrix = [[0] * len(s.B) for _ in s.A]
    matrix[ai][bj] = n
    check_p_matrix(G, s, matrix)
    return yes({"kind": "p-matrix", "p": matrix})


# ---------------------------------------------------------------------------
# regularisation of an arbitrary base

def _sign_pool(C: Subset) -> list:
    """Auxiliary elements: the elements of C first, then their pairwise
    differences, nonzero and deduped up to sign."""
    raw = list(C)
    raw += [vec_sub(c, d) for c in C for d in C]
    pool = []
    seen = set()
    for v in raw:
        if not any(v):
            continue
        key = v if v > vec_neg(v) else vec_neg(v)
        if key in seen:
            continue
        seen.add(key)
        pool.append(key)
    return pool


def sign_forcing_search(base: RelationHandle, s: Sequent, depth: int) -> Decision:
    """Search for auxiliary elements x_1..x_m such that A-B collapses
    onto 0 under the base relation for every choice of signs.  Sound
    for any base (it is the definition of the regularisation); returns
    Unknown on exhaustion, never No."""
    C = difference_set(s.A, s.B)
    origin = zero(s.rank)
    d0 = base.entails(C, origin)
    if d0.is_yes:
        branch = {"signs": [], "witness": {"kind": "forced", "ps": [], "inner": d0.witness}}
        return yes({"kind": "sign-tree", "xs": [], "branches": [branch]})
    pool = _sign_pool(C)
    m_max = min(depth, len(pool), 3)
    tried = 0
    for m in range(1, m_max + 1):
        for xs in combinations(pool, m):
            tried += 1
            if tried > 60:
                return unknown(depth)
            branches = []
            for signs in product((1, -1), repeat=m):
                signed = [vec_scale(e, x) for e, x in zip(signs, xs)]
                d = multi_forced_entails(base, signed, C, origin, depth)
                if not d.is_yes:
                    branches = None
                    break
                branches.append({"signs": list(signs), "witness": d.witness})
            if branches is not None:
                return yes({
                    "kind": "sign-tree",
                    "xs": [list(x) for x in xs],
                    "branches": branches,
                })
    return unknown(depth)


def regular_entails(base: RelationHandle, s: Sequent, depth: int = 6) -> Decision:
    """Entailment in the regularisation of the base system of ideals.

    Finest bases are decided exactly in the free lattice-ordered group
    over their cone.  Dedekind bases over semigroup, polynomial and
    Laurent monoids are decided exactly over the divisibility preorder
    (the reduction to integral dependence of 0 over A-B gives the same
    feasibility problem).  Any other base falls back to the generic
    sign-tree search, which never answers No.
    """
    if isinstance(base, FinestSI):
        return free_entails(base.group, s)
    if isinstance(base, DedekindSI):
        cone = base.domain.divisibility_group()
        if isinstance(cone, (ProductOrder, MatrixOrder, SemigroupOrder)):
            return free_entails(cone, s)
        step = getattr(base.domain, "step", None)
        if step is not None:
            return _free_laurent(step, s)
    return sign_forcing_search(base, s, depth)


def _free_laurent(step: int, s: Sequent) -> Decision:
    # every difference has a multiple in step*Z, so entailment always holds
    from math import gcd

    diff = s.A[0][0] - s.B[0][0]
    r = diff % step
    n = 1 if r == 0 else step // gcd(r, step)
    matrix = [[0] * len(s.B) for _ in s.A]
    matrix[0][0] = n
    return yes({"kind": "p-matrix", "p": matrix})


def forced_regular_entails(base: RelationHandle, x, s: Sequent, depth: int = 6) -> Decision:
    """Regular entailment after forcing 0 <= x: search p <= depth with
    A union (A + px) entailing B; the endpoints suffice for regular
    relations.  Exhaustion yields Unknown, never No (the quantifier
    over p is unbounded; for positive x the p = 0 case already agrees
    with the unforced relation on Yes instances)."""
    x = as_vec(x)
    base.group.check_rank(x)
    for p in range(depth + 1):
        shifted = translate(vec_scale(p, x), s.A)
        d = regular_entails(base, Sequent(subset_union(s.A, shifted), s.B), depth)
        if d.is_yes:
            return yes({"kind": "forced-regular", "p": p, "inner": d.witness})
    return unknown(depth)


# ---------------------------------------------------------------------------
# Pruefer's construction

def _prufer_candidates(A: Subset, b: Vec, bound: int) -> list:
    """Deterministic pool of candidate auxiliary sets X: subsets of
    A+{b}, their pairwise sumsets, progressions along pairwise
    differences, and compositions of the two, smallest first."""
    base_pts = subset_union(A, (b,))
    s_max = max(1, min(bound, 3))
    cands = [(zero(len(b)),)]
    subsets = []
    for size in range(1, s_max + 1):
        for X in combinations(base_pts, size):
            subsets.append(finite_subset(X))
    cands += subsets
    cands += [sumset(Y, Z) for Y, Z in combinations(subsets[:12], 2)]
    diffs = _sign_pool(difference_set(base_pts, base_pts))
    progressions = []
    for x in diffs[:8]:
        for q, p in ((0, 1), (1, 1), (0, 2), (1, 2), (2, 2)):
            if max(q, p) > max(bound, 1):
                continue
            progressions.append(
                finite_subset(tuple(vec_scale(j, x) for j in range(-q, p + 1)))
            )
    cands += progressions
    for Y in subsets[:8]:
        for P in progressions[:10]:
            cands.append(sumset(Y, P))
    out = []
    seen = set()
    limit = 150 + 80 * max(bound, 1)
    for X in cands:
        if X in seen:
            continue
        seen.add(X)
        out.append(X)
        if len(out) >= limit:
            break
    return out


def prufer_entails(base: RelationHandle, A, b, bound: int = 4) -> Decision:
    """Pruefer entailment: A entails b when A + X <= b + X in the ideal
    preorder of the base relation, for some finite X.  The existential
    is unbounded, so exhaustion of the structured pool yields Unknown,
    never No.  A Yes witness is X itself, re-verified before return."""
    A = finite_subset(A)
    b = as_vec(b)
    for X in _prufer_candidates(A, b, bound):
        d = preorder_leq(base, sumset(A, X), translate(b, X))
        if d.is_yes:
            again = preorder_leq(base, sumset(A, X), translate(b, X))
            if not again.is_yes:
                raise InternalCheckError("Pruefer witness failed re-verification")
            return yes({"kind": "prufer-X", "X": [list(x) for x in X]})
    return unknown(bound)


# ---------------------------------------------------------------------------
# relation handles

@dataclass(frozen=True)
class RegularisedSI(RelationHandle):
    """The regularisation of a base system of ideals, restricted to
    single conclusions, as a relation handle."""

    base: RelationHandle
    depth: int = 6

    @property
    def group(self) -> OrderedGroup:
        return self.base.group

    def entails(self, A, b) -> Decision:
        return regular_entails(self.base, Sequent(finite_subset(A), (as_vec(b),)), self.depth)

    def describe(self) -> dict:
        return {"rel": "regular", "depth": self.depth, "base": self.base.describe()}


@dataclass(frozen=True)
class PruferRelation(RelationHandle):
    """Pruefer's entailment over a base system of ideals."""

    base: RelationHandle
    bound: int = 4

    @property
    def group(self) -> OrderedGroup:
        return self.base.group

    def entails(self, A, b) -> Decision:
        return prufer_entails(self.base, A, b, self.bound)

    def describe(self) -> dict:
        return {"rel": "prufer", "bound": self.bound, "base": self.base.describe()}


# ---------------------------------------------------------------------------
# property harnesses

def regular_axiom_suite(base: RelationHandle, samples: int = 200, seed: int = 0,
                        depth: int = 6, box: int = 4) -> dict:
    """Exercise R0 (reflexive), R1 (monotone), R2 (transitive),
    R3 (preorder reflection), R4 (equivariance) and R5 in the two-plus-
    two lemma form: x1+x2 = y1+y2 implies {x1,x2} entails {y1,y2}."""
    rank = base.group.rank
    rng = random.Random(seed)

    def ent(A, B):
        return regular_entails(base, sequent(A, B), depth)

    results = []

    def run(name, fn):
        failures = []
        skipped = 0
        for t in range(samples):
            out = fn()
            if out is None:
                skipped += 1
            elif out is not True:
                failures.append(out)
                if len(failures) >= 5:
                    break
        results.append({
            "axiom": name,
            "trials": samples,
            "skipped": skipped,
            "failures": failures,
        })

    def r0():
        A = sample_subset(rng, rank, box)
        return ent(A, A).is_yes or ("R0", A)

    def r1():
        A = sample_subset(rng, rank, box)
        easy_b = vec_add(A[0], sample_positive(base.group, rng, box))
        B = subset_union((easy_b,), sample_subset(rng, rank, box, max_size=2))
        if not ent(A, B).is_yes:
            return ("R1-antecedent", A, B)
        A2 = subset_union(A, sample_subset(rng, rank, box, max_size=2))
        B2 = subset_union(B, sample_subset(rng, rank, box, max_size=2))
        return ent(A2, B2).is_yes or ("R1", A2, B2)

    def r2():
        A = sample_subset(rng, rank, box, max_size=2)
        if rng.random() < 0.5:
            B = (vec_add(A[0], sample_positive(base.group, rng, box)),)
        else:
            B = sample_subset(rng, rank, box, max_size=2)
        if rng.random() < 0.6 and len(A) >= 2:
            c = vec_add(A[0], A[1])
        else:
            c = sample_vec(rng, rank, box)
        d1 = ent(A, subset_union(B, (c,)))
        d2 = ent(subset_union(A, (c,)), B)
        if not (d1.is_yes and d2.is_yes):
            return None
        return ent(A, B).is_yes or ("R2", A, B, c)

    def r3():
        a = sample_vec(rng, rank, box)
        b = vec_add(a, sample_positive(base.group, rng, box))
        return ent((a,), (b,)).is_yes or ("R3", a, b)

    def r4():
        A = sample_subset(rng, rank, box, max_size=2)
        B = sample_subset(rng, rank, box, max_size=2)
        x = sample_vec(rng, rank, box)
        d1 = ent(A, B)
        d2 = ent(translate(x, A), translate(x, B))
        if d1.is_unknown or d2.is_unknown:
            return None
        return d1.verdict == d2.verdict or ("R4", A, B, x)

    def r5():
        x1 = sample_vec(rng, rank, box)
        x2 = sample_vec(rng, rank, box)
        y1 = sample_vec(rng, rank, box)
        y2 = vec_sub(vec_add(x1, x2), y1)
        return ent((x1, x2), (y1, y2)).is_yes or ("R5", x1, x2, y1, y2)

    for name, fn in (("R0", r0), ("R1", r1), ("R2", r2),
                     ("R3", r3), ("R4", r4), ("R5", r5)):
        run(name, fn)
    return {
        "name": "regular-axioms",
        "relation": base.describe(),
        "seed": seed,
        "samples": samples,
        "axioms": results,
    }


def linearisation_check(base: RelationHandle, samples: int = 200, seed: int = 0,
                        depth: int = 6, box: int = 4) -> dict:
    """Whenever forcing both x and -x yields Yes, the unforced relation
    must already hold."""
    rank = base.group.rank
    rng = random.Random(seed)
    failures = []
    checked = 0
    for t in range(samples):
        A = sample_subset(rng, rank, box, max_size=2)
        B = sample_subset(rng, rank, box, max_size=2)
        if rng.random() < 0.3 and rank >= 2:
            A = finite_subset((A[0], vec_neg(A[0])))
            B = (zero(rank),)
        x = sample_vec(rng, rank, box)
        s = Sequent(A, B)
        dp = forced_regular_entails(base, x, s, depth)
        dm = forced_regular_entails(base, vec_neg(x), s, depth)
        if not (dp.is_yes and dm.is_yes):
            continue
        checked += 1
        if not regular_entails(base, s, depth).is_yes:
            failures.append({"A": A, "B": B, "x": x})
            if len(failures) >= 5:
                break
    return {
        "name": "linearisation",
        "relation": base.describe(),
        "samples": samples,
        "checked": checked,
        "failures": failures,
    }


def agreement_check(base: RelationHandle, samples: int = 200, seed: int = 0,
                    bounds: tuple = (4, 6), box: int = 4) -> dict:
    """Pruefer Yes must imply regular Yes on every sample; verdicts are
    tallied, Unknowns reported separately."""
    prufer_bound, depth = bounds
    rank = base.group.rank
    rng = random.Random(seed)
    tallies = {
        "both_yes": 0, "prufer_yes": 0, "regular_yes": 0,
        "regular_no": 0, "prufer_unknown": 0, "regular_unknown": 0,
    }
    violations = []
    for t in range(samples):
        A = sample_subset(rng, rank, box, max_size=3)
        b = sample_vec(rng, rank, box)
        dp = prufer_entails(base, A, b, prufer_bound)
        dr = regular_entails(base, Sequent(A, (b,)), depth)
        if dp.is_yes:
            tallies["prufer_yes"] += 1
        else:
            tallies["prufer_unknown"] += 1
        if dr.is_yes:
            tallies["regular_yes"] += 1
        elif dr.is_no:
            tallies["regular_no"] += 1
        else:
            tallies["regular_unknown"] += 1
        if dp.is_yes and dr.is_yes:
            tallies["both_yes"] += 1
        if dp.is_yes and dr.is_no:
            violations.append({"A": A, "b": b})
            if len(violations) >= 5:
                break
    return {
        "name": "prufer-regular-agreement",
        "relation": base.describe(),
        "samples": samples,
        **tallies,
        "violations": violations,
    }


def closedness_check(base: RelationHandle, samples: int = 200, seed: int = 0,
                     depth: int = 6, box: int = 4) -> dict:
    """Look for failures of order reflection in the regularisation
    (singleton a entails b without a <= b), and for failures of the
    integral-closedness property (X <= b + X without 0 <= b)."""
    G = base.group
    rank = G.rank
    rng = random.Random(seed)
    singleton_violations = []
    delta_violations = []

    if rank == 1:
        pts = [(v,) for v in range(-box, box + 3)]
    else:
        small = min(box, 2)
        grid = [()]
        for _ in range(rank):
            grid = [p + (c,) for p in grid for c in range(-small, small + 1)]
        pts = sorted(grid, key=lambda v: sum(abs(c) for c in v))[:30]
    for a in pts:
        for b in pts:
            d = regular_entails(base, Sequent((a,), (b,)), depth)
            if d.is_yes and not G.leq(a, b):
                singleton_violations.append((a, b))

    if rank == 1:
        xs_pool = [(v,) for v in range(0, min(box, 4) + 1)]
        det_sets = [finite_subset(c) for c in combinations(xs_pool, 2)]
        det_bs = [(v,) for v in range(-2, box + 1)]
    else:
        det_sets = []
        det_bs = []
    for X in det_sets:
        for b in det_bs:
            if preorder_leq(base, X, translate(b, X)).is_yes and not G.contains(b):
                delta_violations.append({"X": X, "b": b})
    for t in range(samples):
        X = sample_subset(rng, rank, box, max_size=3)
        b = sample_vec(rng, rank, box)
        if preorder_leq(base, X, translate(b, X)).is_yes and not G.contains(b):
            delta_violations.append({"X": X, "b": b})
    return {
        "name": "closedness",
        "relation": base.describe(),
        "samples": samples,
        "singleton_violations": sorted(set(singleton_violations)),
        "delta_violations": delta_violations[:20],
    }
