# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in _purekernels.py.

The dispatcher only routes here when every intermediate value provably
fits in int64, so plain C arithmetic is safe.  The traversal order must
match the pure implementation exactly: both return the
lexicographically least witness.
"""

from libc.stdlib cimport free, malloc


def enum_feasible(cols, long long bound):
    cdef Py_ssize_t m = len(cols)
    cdef Py_ssize_t r = len(cols[0]) if m else 0
    if m == 0 or r == 0:
        return None

    cdef long long *C = <long long *> malloc(m * r * sizeof(long long))
    cdef long long *MR = <long long *> malloc((m + 1) * r * sizeof(long long))
    cdef long long *S = <long long *> malloc((m + 1) * r * sizeof(long long))
    cdef long long *P = <long long *> malloc(m * sizeof(long long))
    cdef char *NZ = <char *> malloc((m + 1) * sizeof(char))
    if C == NULL or MR == NULL or S == NULL or P == NULL or NZ == NULL:
        free(C); free(MR); free(S); free(P); free(NZ)
        raise MemoryError()

    cdef Py_ssize_t i, j, k
    cdef long long v, x
    cdef bint pruned, all_nonpos, nonzero
    try:
        for i in range(m):
            row = cols[i]
            for j in range(r):
                C[i * r + j] = row[j]
        for j in range(r):
            MR[m * r + j] = 0
        for k in range(m - 1, -1, -1):
            for j in range(r):
                x = C[k * r + j]
                if x > 0:
                    x = 0
                MR[k * r + j] = MR[(k + 1) * r + j] + bound * x
        for j in range(r):
            S[j] = 0

        k = 0
        P[0] = -1
        NZ[0] = 0
        while True:
            P[k] += 1
            if P[k] > bound:
                k -= 1
                if k < 0:
                    return None
                continue
            v = P[k]
            pruned = False
            all_nonpos = True
            for j in range(r):
                x = S[k * r + j] + v * C[k * r + j]
                S[(k + 1) * r + j] = x
                if x + MR[(k + 1) * r + j] > 0:
                    pruned = True
                    break
                if x > 0:
                    all_nonpos = False
            if pruned:
                continue
            nonzero = NZ[k] or v > 0
            if nonzero and all_nonpos:
                out = [0] * m
                for i in range(k + 1):
                    out[i] = P[i]
                return out
            if k + 1 == m:
                continue
            k += 1
            P[k] = -1
            NZ[k] = 1 if nonzero else 0
    finally:
        free(C); free(MR); free(S); free(P); free(NZ)


def minimal_mask(points):
    cdef Py_ssize_t n = len(points)
    if n == 0:
        return []
    cdef Py_ssize_t r = len(points[0])
    cdef long long *Q = <long long *> malloc(n * r * sizeof(long long))
    if Q == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, t
    cdef bint le, eq, drop
    keep = [1] * n
    try:
        for i in range(n):
            row = points[i]
            for t in range(r):
                Q[i * r + t] = row[t]
        for i in range(n):
            drop = False
            for j in range(n):
                if i == j:
                    continue
                le = True
                eq = True
                for t in range(r):
                    if Q[j * r + t] > Q[i * r + t]:
                        le = False
                        break
                    if Q[j * r + t] != Q[i * r + t]:
                        eq = False
                if le and ((not eq) or j < i):
                    drop = True
                    break
            if drop:
                keep[i] = 0
        return keep
    finally:
        free(Q)
