"""Acceptance suite.

One test per acceptance criterion, in order; each prints a single
PASS line on success so a plain `pytest -s tests/test_acceptance.py`
reads as a checklist.  Everything here is deterministic (fixed seeds)
and finishes in well under five minutes.
"""

import random
from fractions import Fraction

from lorenzen.domains import (
    PolyRing,
    SemigroupRing,
    basic_divisor,
    divisor_add,
    divisor_leq,
    divisor_meet,
    divisor_neg,
    ideal_member,
    integral_closure,
    integral_dependence,
    macaulay_check,
    monomial_ideal,
)
from lorenzen.entailment import (
    DedekindSI,
    FinestSI,
    axiom_suite_sc,
    suite_failures,
)
from lorenzen.feasibility import (
    FeasibilityProblem,
    brute_force_feasible,
    integer_witness,
    verify_witness,
)
from lorenzen.grothendieck import (
    LatticeTerm,
    groth_add,
    groth_eq,
    groth_join,
    groth_meet,
    leaf,
    regularity_inequality_check,
    term_eval,
)
from lorenzen.groups import MatrixOrder, ProductOrder, SemigroupOrder, lcd_condition_violation
from lorenzen.meetmonoid import gamma_counterexample_search, preorder_leq
from lorenzen.regular import (
    RegularisedSI,
    agreement_check,
    closedness_check,
    free_entails,
    regular_axiom_suite,
    sequent,
)


def _ok(n, text):
    print("criterion %2d: PASS  %s" % (n, text))


def test_criterion_01_cusp_closures_and_the_divisor_of_t():
    S = SemigroupRing((2, 3))
    assert integral_closure(monomial_ideal(S, [(3,)])).gens == ((3,), (4,))
    assert integral_closure(monomial_ideal(S, [(2,)])).gens == ((2,), (3,))
    D = divisor_add(basic_divisor(S, [(3,)]), divisor_neg(basic_divisor(S, [(2,)])))
    assert divisor_leq(basic_divisor(S, [(0,)]), D)
    assert ideal_member(monomial_ideal(S, [(0,)]), (1,)) is False
    _ok(1, "closures over <2,3> and 0 <= div(t) despite 1 outside <0>")


def test_criterion_02_meet_of_coordinate_cubes():
    P = PolyRing(2)
    D = divisor_meet(basic_divisor(P, [(3, 0)]), basic_divisor(P, [(0, 3)]))
    assert set(D.pos.gens) == {(3, 0), (2, 1), (1, 2), (0, 3)}
    _ok(2, "meet of basic((3,0)) and basic((0,3)) closes to four generators")


def test_criterion_03_free_entailment_against_the_brute_force_oracle():
    rng = random.Random(0)
    oracle_yes = 0
    for _ in range(1000):
        rank = rng.randint(1, 3)
        G = ProductOrder(rank)
        A = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(rng.randint(1, 3))]
        B = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(rng.randint(1, 3))]
        s = sequent(A, B)
        d = free_entails(G, s)
        cols = tuple(tuple(x - y for x, y in zip(a, b)) for a in s.A for b in s.B)
        prob = FeasibilityProblem(cols, G)
        if brute_force_feasible(prob, 6) is not None:
            oracle_yes += 1
            assert d.is_yes, (A, B)
        if d.is_yes:
            q = integer_witness([Fraction(x) for row in d.witness["p"] for x in row])
            total = sum(q)
            verify_witness(prob, [Fraction(x, total) for x in q])
    assert oracle_yes > 200
    _ok(3, "1000 random sequents, oracle-Yes %d, zero contradictions" % oracle_yes)


def test_criterion_04_axiom_suites():
    for rel in (FinestSI(ProductOrder(2)), DedekindSI(SemigroupRing((2, 3)))):
        report = axiom_suite_sc(rel, 500, 0)
        assert [a["axiom"] for a in report["axioms"]] == ["S0", "S1", "S2", "S3", "S4"]
        assert suite_failures(report) == [], rel.describe()
    for base in (FinestSI(ProductOrder(1)), FinestSI(ProductOrder(2))):
        report = regular_axiom_suite(base, 200, 0)
        assert [a["axiom"] for a in report["axioms"]] == ["R0", "R1", "R2", "R3", "R4", "R5"]
        assert suite_failures(report) == [], base.describe()
    _ok(4, "S0-S4 at 500 trials (finest, Dedekind); R0-R5 at 200 (Z, Z^2)")


def test_criterion_05_lcd_condition_and_closedness():
    assert lcd_condition_violation(ProductOrder(2)) is None
    assert lcd_condition_violation(MatrixOrder(((1, 1), (0, 1)))) is None
    assert lcd_condition_violation(SemigroupOrder((2, 3))) == ((1,), 2)
    flagged = closedness_check(FinestSI(SemigroupOrder((2, 3))), 200, 0)
    assert ((0,), (1,)) in flagged["singleton_violations"]
    clean = closedness_check(FinestSI(ProductOrder(2)), 200, 0)
    assert clean["singleton_violations"] == [] and clean["delta_violations"] == []
    _ok(5, "violation (1,2) over <2,3>; product/matrix cones clean; 0 |- 1 flagged")


def test_criterion_06_cancellativity_dichotomy():
    ded = DedekindSI(SemigroupRing((2, 3)))
    hit = gamma_counterexample_search(ded, box=8)
    assert hit is not None
    A, X, b = hit
    from lorenzen.groups import sumset, translate

    assert preorder_leq(ded, sumset(A, X), translate(b, X)).is_yes
    assert ded.entails(A, b).is_no
    reg = RegularisedSI(ded)
    assert gamma_counterexample_search(reg, box=8, trials=2000) is None
    _ok(6, "Dedekind <2,3> violates Prufer's condition; its regularisation does not")


def test_criterion_07_prufer_and_regularisation_agree():
    for base in (FinestSI(ProductOrder(2)), DedekindSI(SemigroupRing((2, 3)))):
        report = agreement_check(base, 200, 0)
        assert report["violations"] == [], base.describe()
        assert report["both_yes"] == report["prufer_yes"]
    _ok(7, "200 samples per base: no decided disagreements, prufer-Yes => regular-Yes")


def _random_term(rng, depth):
    if depth == 0 or rng.random() < 0.35:
        return leaf((rng.randint(-2, 2), rng.randint(-2, 2)))
    op = rng.choice(["add", "neg", "meet", "join"])
    if op == "neg":
        return LatticeTerm("neg", (_random_term(rng, depth - 1),))
    return LatticeTerm(op, (_random_term(rng, depth - 1), _random_term(rng, depth - 1)))


def test_criterion_08_lattice_group_identities():
    rel = RegularisedSI(FinestSI(ProductOrder(2)))
    rng = random.Random(0)
    for _ in range(200):
        x = term_eval(rel, _random_term(rng, 2))
        y = term_eval(rel, _random_term(rng, 2))
        lhs = groth_add(groth_join(x, y), groth_meet(x, y))
        assert groth_eq(lhs, groth_add(x, y)).is_yes
    for _ in range(60):
        x = term_eval(rel, _random_term(rng, 1))
        y = term_eval(rel, _random_term(rng, 1))
        z = term_eval(rel, _random_term(rng, 1))
        lhs = groth_meet(x, groth_join(y, z))
        rhs = groth_join(groth_meet(x, y), groth_meet(x, z))
        assert groth_eq(lhs, rhs).is_yes
    report = regularity_inequality_check(rel, samples=200, seed=0)
    assert report["failures"] == []
    _ok(8, "(x v y)+(x ^ y)=x+y, distributivity, regularity inequality: 0 failures")


def test_criterion_09_macaulay_cancellation():
    report = macaulay_check(PolyRing(2), 300, 6, 0)
    assert report["failures"] == []
    assert report["antecedent_hits"] > 0
    _ok(9, "300 random triples over PolyRing(2), %d antecedent hits, 0 failures"
        % report["antecedent_hits"])


def test_criterion_10_integral_dependence_is_free_entailment():
    rng = random.Random(0)
    P = PolyRing(2)
    S = SemigroupRing((2, 3))
    checked = 0
    for _ in range(500):
        gens = [(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(rng.randint(1, 3))]
        b = (rng.randint(-1, 6), rng.randint(-1, 6))
        lhs = integral_dependence(monomial_ideal(P, gens), b).verdict
        rhs = free_entails(P.divisibility_group(), sequent(gens, [b])).verdict
        assert lhs == rhs, (gens, b)
        checked += 1
    for _ in range(500):
        gens = [(rng.randint(0, 8),) for _ in range(rng.randint(1, 3))]
        b = (rng.randint(-2, 10),)
        lhs = integral_dependence(monomial_ideal(S, gens), b).verdict
        rhs = free_entails(S.divisibility_group(), sequent(gens, [b])).verdict
        assert lhs == rhs, (gens, b)
        checked += 1
    _ok(10, "%d monomial instances, polynomial and semigroup rings, 0 mismatches" % checked)
