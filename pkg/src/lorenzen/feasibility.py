"""Exact rational feasibility of homogeneous cone systems.

The single question answered here: given integer columns c_1..c_m and a
cone cut out by M.v >= 0, is there p >= 0, not all zero, with
M.(sum p_k c_k) <= 0?  "Not all zero" is encoded as sum p_k = 1, which
is equivalent because the solution set is a cone.

Two independent engines decide it: an exact-rational simplex phase-1
(Bland's rule, no cycling) and a Fourier-Motzkin eliminator used as a
cross-check on small instances.  Every witness is re-verified before it
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional, Sequence

from . import _kernels
from .errors import ArgumentError, InternalCheckError, UnsupportedConeError
from .groups import MatrixOrder, OrderedGroup, ProductOrder, Vec

# instances with rank * columns at most this get the second engine
CROSS_CHECK_LIMIT = 24
_FM_ROW_CAP = 50_000


class _FMOverflow(Exception):
    """Fourier-Motzkin row count exceeded the cap; cross-check skipped."""


@dataclass(frozen=True)
class FeasibilityProblem:
    """Columns c_1..c_m (a sequence: order matters for witnesses,
    duplicates allowed) over a matrix or product cone."""

    columns: tuple
    cone: OrderedGroup

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if not cols:
            raise ArgumentError("feasibility problem needs at least one column")
        for c in cols:
            self.cone.check_rank(c)

    def transformed_columns(self) -> list:
        """Each column as its vector of inequality-row values M.c_k."""
        rows = _cone_rows(self.cone)
        return [
            [sum(m * x for m, x in zip(row, col)) for row in rows]
            for col in self.columns
        ]


def _cone_rows(cone: OrderedGroup) -> tuple:
    if not isinstance(cone, (ProductOrder, MatrixOrder)):
        raise UnsupportedConeError(
            "feasibility engine supports product/matrix cones only, got %s"
            % type(cone).__name__
        )
    return cone.inequality_rows()


def verify_witness(prob: FeasibilityProblem, p: Sequence[Fraction]) -> None:
    """Raise InternalCheckError unless p is a valid rational witness."""
    if len(p) != len(prob.columns):
        raise InternalCheckError("witness length mismatch")
    if any(x < 0 for x in p):
        raise InternalCheckError("witness has a negative entry")
    if sum(p) != 1:
        raise InternalCheckError("witness is not normalised")
    rows = _cone_rows(prob.cone)
    combo = [
        sum(pk * ck for pk, ck in zip(p, coords))
        for coords in zip(*prob.columns)
    ]
    for row in rows:
        val = sum(m * x for m, x in zip(row, combo))
        if val > 0:
            raise InternalCheckError(
                "witness violates inequality row %r: value %s > 0" % (row, val)
            )


# ---------------------------------------------------------------------------
# engine 1: simplex phase-1

def _simplex_phase1(D: list, m: int) -> Optional[list]:
    """Feasibility of: p >= 0, sum p = 1, D.p <= 0 (D given row-wise).

    Returns the p part of a basic feasible solution, or None.
    """
    r = len(D)
    ncols = m + r + 1  # p vars, slacks, one artificial on the sum row
    a0 = m + r
    T = []
    for i in range(r):
        row = [Fraction(D[i][k]) for k in range(m)]
        row += [Fraction(1) if j == i else Fraction(0) for j in range(r)]
        row += [Fraction(0), Fraction(0)]  # artificial, rhs
        T.append(row)
    sumrow = [Fraction(1)] * m + [Fraction(0)] * r + [Fraction(1), Fraction(1)]
    T.append(sumrow)
    basis = [m + i for i in range(r)] + [a0]

    while True:
        try:
            arow = basis.index(a0)
        except ValueError:
            break  # artificial left the basis: objective 0
        if T[arow][ncols] == 0:
            break  # degenerate optimum, already feasible
        # Bland: smallest eligible entering column
        enter = None
        for j in range(ncols):
            if j != a0 and j not in basis and T[arow][j] > 0:
                enter = j
                break
        if enter is None:
            return None  # artificial stuck positive: infeasible
        # ratio test; ties broken by smallest basis index (Bland)
        leave = None
        best = None
        for i in range(r + 1):
            if T[i][enter] > 0:
                ratio = T[i][ncols] / T[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            return None  # unbounded direction cannot happen with sum row
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(r + 1):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        basis[leave] = enter

    sol = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        sol[b] = T[i][ncols]
    return sol[:m]


# ---------------------------------------------------------------------------
# engine 2: Fourier-Motzkin

def _fm_eliminate(ineqs: list, nvars: int) -> bool:
    """Feasibility of { q : coeffs . q <= const } by variable elimination."""
    rows = {tuple(c) + (b,) for c, b in ineqs}
    for _ in range(nvars):
        work = [(list(row[:-1]), row[-1]) for row in rows]
        # eliminate the variable with the fewest pos*neg combinations
        best_v, best_cost = 0, None
        live = len(work[0][0]) if work else 0
        if live == 0:
            break
        for v in range(live):
            npos = sum(1 for c, _ in work if c[v] > 0)
            nneg = sum(1 for c, _ in work if c[v] < 0)
            cost = npos * nneg
            if best_cost is None or cost < best_cost:
                best_v, best_cost = v, cost
        v = best_v
        pos, neg, zero = [], [], []
        for c, b in work:
            if c[v] > 0:
                pos.append((c, b))
            elif c[v] < 0:
                neg.append((c, b))
            else:
                zero.append((c[:v] + c[v + 1:], b))
        new_rows = set()
        for c, b in zero:
            new_rows.add(tuple(c) + (b,))
        for cp, bp in pos:
            fp = cp[v]
            for cn, bn in neg:
                fn = -cn[v]
                c = [
                    cp[t] / fp + cn[t] / fn
                    for t in range(len(cp))
                    if t != v
                ]
                new_rows.add(tuple(c) + (bp / fp + bn / fn,))
                if len(new_rows) > _FM_ROW_CAP:
                    raise _FMOverflow()
        rows = new_rows
        if not rows:
            return True  # no constraints left
    return all(row[-1] >= 0 for row in rows)


def fm_feasible(prob: FeasibilityProblem) -> bool:
    """Independent decision of the same system via Fourier-Motzkin."""
    D = prob.transformed_columns()  # D[k][i]: column k, inequality row i
    m = len(prob.columns)
    r = len(D[0])
    # substitute p_{m-1} = 1 - sum_{k<m-1} p_k to remove the equality
    ineqs = []

    def add(coeffs, bound):
        last = coeffs[m - 1]
        ineqs.append(
            (
                [Fraction(coeffs[k] - last) for k in range(m - 1)],
                Fraction(bound - last),
            )
        )

    for k in range(m):  # p_k >= 0
        add([-1 if t == k else 0 for t in range(m)], 0)
    for i in range(r):  # inequality rows
        add([D[k][i] for k in range(m)], 0)
    return _fm_eliminate(ineqs, m - 1)


# ---------------------------------------------------------------------------
# public interface

def feasible(
    prob: FeasibilityProblem, cross_check: Optional[bool] = None
) -> Optional[tuple]:
    """A rational witness p (p >= 0, sum 1, M.(sum p_k c_k) <= 0), or None.

    cross_check=None runs the Fourier-Motzkin engine automatically on
    instances with rank*m <= CROSS_CHECK_LIMIT; any disagreement between
    the engines is an InternalCheckError.
    """
    D_cols = prob.transformed_columns()
    D = [[D_cols[k][i] for k in range(len(D_cols))] for i in range(len(D_cols[0]))]
    p = _simplex_phase1(D, len(prob.columns))
    if p is not None:
        verify_witness(prob, p)
    if cross_check is None:
        cross_check = prob.cone.rank * len(prob.columns) <= CROSS_CHECK_LIMIT
    if cross_check:
        try:
            other = fm_feasible(prob)
        except _FMOverflow:
            other = None
        if other is not None and other != (p is not None):
            raise InternalCheckError(
                "simplex and Fourier-Motzkin disagree on %r" % (prob,)
            )
    return tuple(p) if p is not None else None


@lru_cache(maxsize=1 << 15)
def feasible_cached(prob: FeasibilityProblem) -> Optional[tuple]:
    """Memoised feasible(); problems are immutable and hashable."""
    return feasible(prob)


def integer_witness(p: Sequence[Fraction]) -> tuple:
    """Clear denominators and reduce: integer witness by homogeneity."""
    denom = lcm(*(Fraction(x).denominator for x in p)) if p else 1
    q = [int(Fraction(x) * denom) for x in p]
    g = 0
    for x in q:
        g = gcd(g, x)
    if g > 1:
        q = [x // g for x in q]
    return tuple(q)


def brute_force_feasible(
    prob: FeasibilityProblem, bound: int
) -> Optional[tuple]:
    """Exhaustive oracle: least p in [0..bound]^m, p != 0, with
    M.(sum p_k c_k) <= 0; None if no such p exists within the bound."""
    if bound < 1:
        raise ArgumentError("bound must be >= 1")
    cols = prob.transformed_columns()
    found = _kernels.enum_feasible(cols, bound)
    if found is None:
        return None
    # independent re-check of the integer witness
    total = sum(found)
    verify_witness(prob, [Fraction(x, total) for x in found])
    return tuple(found)


def riesz_refine(n: Sequence[int], m: Sequence[int]) -> list:
    """Northwest-corner matrix with row sums n and column sums m."""
    n = [int(x) for x in n]
    m = [int(x) for x in m]
    if any(x < 0 for x in n) or any(x < 0 for x in m):
        raise ArgumentError("riesz_refine needs nonnegative entries")
    if sum(n) != sum(m) or sum(n) < 1:
        raise ArgumentError("riesz_refine needs equal sums >= 1")
    P = [[0] * len(m) for _ in n]
    i = j = 0
    rn, rm = list(n), list(m)
    while i < len(n) and j < len(m):
        t = min(rn[i], rm[j])
        P[i][j] = t
        rn[i] -= t
        rm[j] -= t
        if rn[i] == 0:
            i += 1
        if rm[j] == 0:
            j += 1
    if [sum(row) for row in P] != n or [
        sum(P[i][j] for i in range(len(n))) for j in range(len(m))
    ] != m:
        raise InternalCheckError("riesz_refine sums do not match")
    return P
