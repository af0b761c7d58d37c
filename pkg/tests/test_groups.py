"""Ordered group primitives: cones, subsets, descriptors."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorenzen.errors import ArgumentError, DimensionError, UnsupportedConeError
from lorenzen.groups import (
    MatrixOrder,
    ProductOrder,
    SemigroupOrder,
    TrivialOrder,
    as_vec,
    difference_set,
    finite_subset,
    group_from_descriptor,
    lcd_condition_violation,
    negate,
    nfold,
    sumset,
    translate,
)


class TestProductOrder:
    def test_leq_componentwise(self):
        G = ProductOrder(2)
        assert G.leq((0, 0), (1, 2))
        assert G.leq((1, 2), (1, 2))
        assert not G.leq((1, 0), (0, 1))

    def test_contains_is_positive_orthant(self):
        G = ProductOrder(3)
        assert G.contains((0, 0, 0))
        assert G.contains((1, 0, 4))
        assert not G.contains((1, -1, 0))

    def test_rank_one_accepts_bare_ints(self):
        G = ProductOrder(1)
        assert G.leq(0, 5)
        assert not G.leq(5, 0)

    def test_rank_mismatch_rejected(self):
        with pytest.raises(DimensionError):
            ProductOrder(2).leq((1, 2, 3), (0, 0, 0))

    def test_opposite_reverses(self):
        G = ProductOrder(2)
        H = G.opposite()
        assert H.leq((1, 2), (0, 0))
        assert not H.leq((0, 0), (1, 2))


class TestMatrixOrder:
    def test_single_row(self):
        G = MatrixOrder(((1, 1),))
        assert G.leq((0, 0), (2, -1))  # row sum grows by 1
        assert not G.leq((0, 0), (-2, 1))

    def test_opposite_negates_rows(self):
        G = MatrixOrder(((1, 1),))
        H = G.opposite()
        assert H.leq((2, -1), (0, 0))
        assert not H.leq((0, 0), (2, -1))

    def test_inequality_rows_exposed(self):
        rows = ((1, 0), (1, 1))
        assert MatrixOrder(rows).inequality_rows() == rows


class TestSemigroupOrder:
    def test_numerical_semigroup_membership(self):
        S = SemigroupOrder((2, 3))
        members = [n for n in range(-2, 8) if S.contains((n,))]
        assert members == [0, 2, 3, 4, 5, 6, 7]

    def test_leq_is_divisibility(self):
        S = SemigroupOrder((2, 3))
        assert S.leq((5,), (8,))
        assert not S.leq((5,), (6,))  # 1 not in the semigroup

    def test_opposite_unrepresentable(self):
        with pytest.raises(UnsupportedConeError):
            SemigroupOrder((2, 3)).opposite()


class TestTrivialOrder:
    def test_only_reflexive(self):
        G = TrivialOrder(2)
        assert G.leq((1, 1), (1, 1))
        assert not G.leq((0, 0), (1, 1))
        assert not G.leq((1, 1), (0, 0))


class TestSubsets:
    def test_finite_subset_sorts_and_dedups(self):
        A = finite_subset([(1, 0), (0, 1), (1, 0)])
        assert A == ((0, 1), (1, 0))

    def test_sumset(self):
        A = finite_subset([(0, 1), (1, 0)])
        assert sumset(A, A) == ((0, 2), (1, 1), (2, 0))

    def test_difference_set(self):
        A = finite_subset([(2,)])
        B = finite_subset([(1,), (3,)])
        assert difference_set(A, B) == ((-1,), (1,))

    def test_translate_and_negate(self):
        A = finite_subset([(1, 2)])
        assert translate((1, 1), A) == ((2, 3),)
        assert negate(A) == ((-1, -2),)

    def test_nfold_repeated_sumset(self):
        A = finite_subset([(0,), (1,)])
        assert nfold(A, 3) == ((0,), (1,), (2,), (3,))

    def test_as_vec_coerces_ints(self):
        assert as_vec(5) == (5,)
        assert as_vec((1, 2)) == (1, 2)

    def test_empty_subset_rejected(self):
        with pytest.raises(ArgumentError):
            finite_subset([])


class TestDescriptors:
    @pytest.mark.parametrize(
        "G",
        [
            ProductOrder(2),
            MatrixOrder(((1, 1), (1, 0))),
            SemigroupOrder((2, 3)),
            TrivialOrder(1),
        ],
    )
    def test_round_trip(self, G):
        H = group_from_descriptor(G.descriptor())
        assert H.descriptor() == G.descriptor()
        assert type(H) is type(G)


class TestLcdCondition:
    def test_product_and_matrix_cones_satisfy(self):
        assert lcd_condition_violation(ProductOrder(2)) is None
        assert lcd_condition_violation(MatrixOrder(((1, 1),))) is None

    def test_semigroup_violates_at_one(self):
        hit = lcd_condition_violation(SemigroupOrder((2, 3)))
        assert hit == ((1,), 2)  # 2*1 lies in <2,3> but 1 does not


@settings(max_examples=60, deadline=None)
@given(
    a=st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
    b=st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
    c=st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
)
def test_product_order_translation_invariant_and_transitive(a, b, c):
    G = ProductOrder(2)
    shifted = tuple(x + y for x, y in zip(a, c))
    shifted_b = tuple(x + y for x, y in zip(b, c))
    assert G.leq(a, b) == G.leq(shifted, shifted_b)
    if G.leq(a, b) and G.leq(b, c):
        assert G.leq(a, c)


@settings(max_examples=40, deadline=None)
@given(m=st.integers(0, 20), n=st.integers(0, 20))
def test_semigroup_cone_closed_under_addition(m, n):
    S = SemigroupOrder((3, 5))
    if S.contains((m,)) and S.contains((n,)):
        assert S.contains((m + n,))
