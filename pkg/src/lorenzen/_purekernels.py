"""Pure-Python reference kernels.

Both kernels have compiled twins in _speedups.pyx; the dispatcher in
_kernels.py guarantees the compiled path is only taken when every
intermediate fits in int64, so the two implementations are
interchangeable bit for bit.  Keep the traversal logic in exact sync:
tests assert identical outputs, not just equivalent ones.
"""

from __future__ import annotations

from typing import Optional


def enum_feasible(cols, bound: int) -> Optional[list]:
    """Lexicographically least p in [0..bound]^m, p != 0, with
    sum_k p_k * cols[k] <= 0 componentwise; None if there is none.

    cols: m rows of length r (already transformed by the cone matrix).
    """
    m = len(cols)
    r = len(cols[0]) if m else 0
    if m == 0 or r == 0:
        return None
    # least achievable contribution of columns k.. to each coordinate
    minrem = [[0] * r for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        for j in range(r):
            minrem[k][j] = minrem[k + 1][j] + bound * min(0, cols[k][j])

    sums = [[0] * r for _ in range(m + 1)]
    p = [0] * m
    nz = [False] * (m + 1)
    k = 0
    p[0] = -1
    while True:
        p[k] += 1
        if p[k] > bound:
            k -= 1
            if k < 0:
                return None
            continue
        row = cols[k]
        cur = sums[k]
        nxt = sums[k + 1]
        v = p[k]
        for j in range(r):
            nxt[j] = cur[j] + v * row[j]
        mr = minrem[k + 1]
        if any(nxt[j] + mr[j] > 0 for j in range(r)):
            continue
        nonzero = nz[k] or v > 0
        if nonzero and all(x <= 0 for x in nxt):
            return p[: k + 1] + [0] * (m - k - 1)
        if k + 1 == m:
            continue
        k += 1
        p[k] = -1
        nz[k] = nonzero


def minimal_mask(points) -> list:
    """keep[i] = 1 iff no other point dominates points[i] componentwise.

    Equal points keep the earlier index.  Dominance is checked against
    every point, kept or not; transitivity makes that equivalent to
    checking against kept points only.
    """
    n = len(points)
    keep = [1] * n
    for i in range(n):
        pi = points[i]
        for j in range(n):
            if i == j:
                continue
            pj = points[j]
            if all(a <= b for a, b in zip(pj, pi)) and (pj != pi or j < i):
                keep[i] = 0
                break
    return keep
