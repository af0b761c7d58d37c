"""Single-conclusion relations: finest, Dedekind, forced."""

import random

import pytest

from lorenzen.decision import Decision, no, yes
from lorenzen.domains import PolyRing, SemigroupRing, dedekind_forced
from lorenzen.entailment import (
    DedekindSI,
    FinestSI,
    ForcedRelation,
    RelationHandle,
    axiom_suite_sc,
    forced_entails,
    multi_forced_entails,
    order_reflection_check,
    sc_entails,
    suite_failures,
)
from lorenzen.errors import ArgumentError
from lorenzen.groups import ProductOrder, SemigroupOrder, finite_subset
from lorenzen.sampling import sample_subset, sample_vec


class TestFinest:
    def test_some_element_below(self):
        rel = FinestSI(ProductOrder(2))
        d = rel.entails(finite_subset([(0, 1), (1, 0)]), (1, 1))
        assert d.is_yes
        assert d.witness == {"kind": "sc-index", "index": 0, "element": [0, 1]}

    def test_no_element_below(self):
        rel = FinestSI(ProductOrder(2))
        assert rel.entails(finite_subset([(0, 1), (1, 0)]), (0, 0)).is_no

    def test_witness_index_refers_to_sorted_subset(self):
        rel = FinestSI(ProductOrder(1))
        d = sc_entails(rel, [(5,), (-2,)], (0,))
        assert d.is_yes
        A = finite_subset([(5,), (-2,)])
        i = d.witness["index"]
        assert tuple(d.witness["element"]) == A[i] == (-2,)


class TestDedekind:
    def test_membership_with_witness(self):
        rel = DedekindSI(SemigroupRing((2, 3)))
        d = rel.entails(finite_subset([(2,), (3,)]), (5,))
        assert d.is_yes and d.witness["element"] == [2]

    def test_gap_blocks_membership(self):
        rel = DedekindSI(SemigroupRing((2, 3)))
        assert rel.entails(finite_subset([(3,)]), (4,)).is_no

    def test_fractional_antecedents_allowed(self):
        rel = DedekindSI(SemigroupRing((2, 3)))
        assert rel.entails(finite_subset([(-2,)]), (0,)).is_yes


class TestForced:
    def test_contracting_constraint_reaches_target(self):
        rel = FinestSI(ProductOrder(2))
        d = forced_entails(rel, (-1, -1), [(2, 2)], (0, 0), 6)
        assert d.is_yes
        assert d.witness["ps"] == [2]
        assert d.witness["inner"]["element"] == [0, 0]

    def test_expanding_constraint_cannot_help(self):
        rel = FinestSI(ProductOrder(2))
        assert forced_entails(rel, (1, 1), [(2, 2)], (0, 0), 6).is_no

    def test_exact_path_ignores_depth(self):
        # the one-variable integer analysis finds p = 9 under depth 3
        rel = FinestSI(ProductOrder(2))
        d = forced_entails(rel, (-1, -1), [(9, 9)], (0, 0), 3)
        assert d.is_yes and d.witness["ps"] == [9]

    def test_positive_constraint_is_vacuous(self):
        rel = FinestSI(ProductOrder(2))
        d = forced_entails(rel, (1, 1), [(2, 2)], (2, 2), 6)
        assert d.is_yes and d.witness["ps"] == [0]

    def test_two_constraints_compose(self):
        rel = FinestSI(ProductOrder(2))
        d = multi_forced_entails(rel, [(-1, 0), (0, -1)], [(1, 1)], (0, 0), 6)
        assert d.is_yes and d.witness["ps"] == [1, 1]

    def test_bounded_search_returns_unknown(self):
        rel = FinestSI(SemigroupOrder((2, 3)))
        d = forced_entails(rel, (1,), [(3,)], (0,), 6)
        assert d.is_unknown and d.bound_used == 6

    def test_handle_wraps_multi(self):
        base = FinestSI(ProductOrder(2))
        rel = ForcedRelation(base, ((-1, 0), (0, -1)), 6)
        assert rel.entails(finite_subset([(1, 1)]), (0, 0)).is_yes
        desc = rel.describe()
        assert desc["rel"] == "forced" and desc["x"] == [-1, 0]
        assert desc["base"]["x"] == [0, -1]

    def test_empty_constraints_rejected(self):
        with pytest.raises(ArgumentError):
            ForcedRelation(FinestSI(ProductOrder(1)), (), 6)

    def test_forcing_matches_dedekind_of_the_extension(self):
        # adjoining x to the domain and forcing 0 |> x give the same
        # single-conclusion verdicts wherever both are decided
        rng = random.Random(13)
        S = SemigroupRing((2, 3))
        base = DedekindSI(S)
        for x in [(2,), (3,), (7,)]:
            forced_dom = DedekindSI(dedekind_forced(S, x))
            for _ in range(40):
                A = sample_subset(rng, 1, 5)
                b = sample_vec(rng, 1, 5)
                lhs = forced_entails(base, x, A, b, 8)
                rhs = forced_dom.entails(A, b)
                if not lhs.is_unknown:
                    assert lhs.verdict == rhs.verdict, (x, A, b)

    def test_forcing_inverse_collapses_to_laurent(self):
        S = SemigroupRing((2, 3))
        base = DedekindSI(S)
        forced_dom = DedekindSI(dedekind_forced(S, (-1,)))
        rng = random.Random(14)
        for _ in range(60):
            A = sample_subset(rng, 1, 5)
            b = sample_vec(rng, 1, 5)
            lhs = forced_entails(base, (-1,), A, b, 8)
            if not lhs.is_unknown:
                assert lhs.verdict == forced_dom.entails(A, b).verdict


class _Broken(RelationHandle):
    """Gerrymandered relation violating monotonicity: membership of a
    fixed pivot flips the verdict."""

    def __init__(self):
        self.group = ProductOrder(1)

    def entails(self, A, b):
        if (1,) in A:
            return no()
        for i, a in enumerate(A):
            if self.group.leq(a, b):
                return yes({"kind": "sc-index", "index": i, "element": list(a)})
        return no()

    def describe(self):
        return {"rel": "broken"}


class TestAxiomSuite:
    def test_finest_passes(self):
        report = axiom_suite_sc(FinestSI(ProductOrder(2)), 150, 0)
        assert suite_failures(report) == []
        names = [ax["axiom"] for ax in report["axioms"]]
        assert names == ["S0", "S1", "S2", "S3", "S4"]

    def test_dedekind_passes(self):
        report = axiom_suite_sc(DedekindSI(SemigroupRing((2, 3))), 150, 0)
        assert suite_failures(report) == []

    def test_broken_relation_is_caught(self):
        report = axiom_suite_sc(_Broken(), 150, 0)
        assert suite_failures(report) != []

    def test_every_axiom_exercised(self):
        report = axiom_suite_sc(FinestSI(ProductOrder(1)), 150, 0)
        for ax in report["axioms"]:
            assert ax["trials"] - ax["skipped"] > 0, ax["axiom"]


class TestOrderReflection:
    def test_finest_reflects_the_order(self):
        report = order_reflection_check(FinestSI(ProductOrder(2)), 100, 0)
        assert report["violations"] == []

    def test_dedekind_reflects_divisibility(self):
        report = order_reflection_check(DedekindSI(SemigroupRing((2, 3))), 100, 0)
        assert report["violations"] == []


class TestDecision:
    def test_bool_and_flags(self):
        d = yes({"kind": "sc-index", "index": 0, "element": [0]})
        assert d and d.is_yes
        assert not no() and no().is_no

    def test_yes_requires_witness(self):
        with pytest.raises(ArgumentError):
            yes(None)

    def test_unknown_requires_bound(self):
        from lorenzen.decision import unknown

        d = unknown(5)
        assert d.is_unknown and d.bound_used == 5
        assert not d

    def test_json_dict(self):
        d = yes({"kind": "sc-index", "index": 0, "element": [1]})
        assert d.as_json_dict()["verdict"] == "yes"


class TestHandleKeys:
    def test_key_is_stable_and_distinct(self):
        a = FinestSI(ProductOrder(2)).key()
        b = FinestSI(ProductOrder(3)).key()
        c = DedekindSI(SemigroupRing((2, 3))).key()
        assert a == FinestSI(ProductOrder(2)).key()
        assert len({a, b, c}) == 3
