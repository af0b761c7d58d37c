"""Exact rational feasibility over cone inequalities.

feasible() decides whether some nonnegative, not-all-zero combination
of the columns lands weakly below zero in the cone; the rational
witness must survive verify_witness and integer clearing.
"""

import random
from fractions import Fraction

import pytest

from lorenzen.errors import ArgumentError, InternalCheckError
from lorenzen.feasibility import (
    FeasibilityProblem,
    brute_force_feasible,
    feasible,
    integer_witness,
    riesz_refine,
    verify_witness,
)
from lorenzen.groups import MatrixOrder, ProductOrder


def _prob(cols, cone=None):
    return FeasibilityProblem(tuple(tuple(c) for c in cols), cone or ProductOrder(len(cols[0])))


class TestFeasible:
    def test_negative_column_is_enough(self):
        p = feasible(_prob([(-1, 0), (5, 5)]))
        assert p is not None
        assert sum(p) == 1 and all(x >= 0 for x in p)

    def test_positive_columns_infeasible(self):
        assert feasible(_prob([(1, 0), (0, 1), (2, 3)])) is None

    def test_cancellation_needs_both_columns(self):
        # each column has a positive coordinate, so neither works alone
        prob = _prob([(1, -2), (-2, 1)])
        assert feasible(_prob([(1, -2)])) is None
        assert feasible(_prob([(-2, 1)])) is None
        p = feasible(prob)
        assert p is not None

    def test_zero_column_counts(self):
        p = feasible(_prob([(0, 0)]))
        assert p == (Fraction(1),)

    def test_matrix_cone(self):
        G = MatrixOrder(((1, 1),))
        # row-sum of the combination must be <= 0
        assert feasible(_prob([(2, -3)], G)) is not None
        assert feasible(_prob([(2, -1)], G)) is None

    def test_empty_columns_rejected(self):
        with pytest.raises(ArgumentError):
            FeasibilityProblem((), ProductOrder(2))


class TestWitnesses:
    def test_verify_witness_rejects_bad_combination(self):
        prob = _prob([(1, 0), (0, -1)])
        with pytest.raises(InternalCheckError):
            verify_witness(prob, [Fraction(1), Fraction(0)])

    def test_verify_witness_rejects_zero_weight(self):
        prob = _prob([(-1, 0)])
        with pytest.raises(InternalCheckError):
            verify_witness(prob, [Fraction(0)])

    def test_integer_witness_clears_denominators(self):
        assert integer_witness([Fraction(2, 3), Fraction(1, 3)]) == (2, 1)
        assert integer_witness([Fraction(1, 2), Fraction(1, 2)]) == (1, 1)

    def test_integer_witness_reduces_gcd(self):
        assert integer_witness([Fraction(4), Fraction(2)]) == (2, 1)


class TestBruteForceOracle:
    def test_agrees_with_simplex_on_random_instances(self):
        rng = random.Random(3)
        for _ in range(300):
            rank = rng.randint(1, 3)
            m = rng.randint(1, 4)
            cols = [
                tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(m)
            ]
            prob = _prob(cols)
            exact = feasible(prob)
            oracle = brute_force_feasible(prob, 6)
            if oracle is not None:
                assert exact is not None, (cols, oracle)
            if exact is not None:
                q = integer_witness(exact)
                total = sum(q)
                verify_witness(prob, [Fraction(x, total) for x in q])

    def test_bound_too_small_misses(self):
        # 5*p0 = 3*p1 forces p = (3, 5); bound 4 cannot see it
        prob = _prob([(5, -5), (-3, 3)])
        assert brute_force_feasible(prob, 4) is None
        assert brute_force_feasible(prob, 5) == (3, 5)
        assert feasible(prob) is not None  # the exact engine is unbounded


class TestRieszRefine:
    def test_known_refinement(self):
        P = riesz_refine([2, 1], [1, 1, 1])
        assert [sum(row) for row in P] == [2, 1]
        assert [sum(col) for col in zip(*P)] == [1, 1, 1]

    def test_random_margins(self):
        rng = random.Random(5)
        for _ in range(100):
            n = [rng.randint(0, 5) for _ in range(rng.randint(1, 4))]
            m = [rng.randint(0, 5) for _ in range(rng.randint(1, 4))]
            gap = sum(n) - sum(m)
            if gap > 0:
                m[0] += gap
            elif gap < 0:
                n[0] -= gap
            if sum(n) < 1:
                n[0] += 1
                m[0] += 1
            P = riesz_refine(n, m)
            assert [sum(row) for row in P] == n
            assert [sum(col) for col in zip(*P)] == m
            assert all(x >= 0 for row in P for x in row)

    def test_unequal_sums_rejected(self):
        with pytest.raises(ArgumentError):
            riesz_refine([1], [2])
