"""Exact kernels for constructive order theory on ordered abelian groups:
entailment relations, systems of ideals, regularisation, Grothendieck
lattice-groups and Lorenzen divisor groups for monomial domains.  Every
decision carries a witness that can be re-checked independently."""

from .decision import Decision, no, unknown, yes
from .domains import (
    Divisor,
    ForcedPolyRing,
    LaurentRing,
    MonomialDomain,
    MonomialIdeal,
    PolyRing,
    SemigroupRing,
    basic_divisor,
    dedekind_forced,
    divisor_add,
    divisor_eq,
    divisor_leq,
    divisor_meet,
    divisor_neg,
    domain_from_descriptor,
    ideal_member,
    integral_closure,
    integral_dependence,
    macaulay_check,
    monomial_ideal,
)
from .entailment import (
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
from .errors import (
    ArgumentError,
    BoundedRelationError,
    CancellativityError,
    DimensionError,
    InternalCheckError,
    LorenzenError,
    MalformedInputError,
    UnsupportedConeError,
    UnsupportedDomainError,
)
from .feasibility import (
    FeasibilityProblem,
    brute_force_feasible,
    feasible,
    integer_witness,
    riesz_refine,
    verify_witness,
)
from .grothendieck import (
    FormalDifference,
    LatticeTerm,
    cancellativity_gate,
    from_element,
    groth_abs,
    groth_add,
    groth_eq,
    groth_join,
    groth_leq,
    groth_meet,
    groth_neg,
    leaf,
    parse_term,
    regularity_inequality_check,
    term_eval,
)
from .groups import (
    MatrixOrder,
    OrderedGroup,
    ProductOrder,
    SemigroupOrder,
    TrivialOrder,
    difference_set,
    finite_subset,
    group_from_descriptor,
    lcd_condition_violation,
    leq,
    negate,
    nfold,
    sumset,
    translate,
    vec,
)
from .meetmonoid import (
    MeetTerm,
    canonicalize,
    gamma_counterexample_search,
    ideal_add,
    ideal_meet,
    preorder_leq,
    term_eq,
)
from .regular import (
    PruferRelation,
    RegularisedSI,
    Sequent,
    agreement_check,
    check_p_matrix,
    closedness_check,
    forced_regular_entails,
    free_entails,
    linearisation_check,
    prufer_entails,
    regular_axiom_suite,
    regular_entails,
    sequent,
    sign_forcing_search,
)
from .serialize import (
    canonical_json,
    make_certificate,
    parse_domain_shorthand,
    parse_group_shorthand,
    relation_from_descriptor,
)
from .verify import verify_certificate

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "BoundedRelationError",
    "CancellativityError",
    "Decision",
    "DedekindSI",
    "DimensionError",
    "Divisor",
    "FeasibilityProblem",
    "FinestSI",
    "ForcedPolyRing",
    "ForcedRelation",
    "FormalDifference",
    "InternalCheckError",
    "LatticeTerm",
    "LaurentRing",
    "LorenzenError",
    "MalformedInputError",
    "MatrixOrder",
    "MeetTerm",
    "MonomialDomain",
    "MonomialIdeal",
    "OrderedGroup",
    "PolyRing",
    "ProductOrder",
    "PruferRelation",
    "RegularisedSI",
    "RelationHandle",
    "SemigroupOrder",
    "SemigroupRing",
    "Sequent",
    "TrivialOrder",
    "UnsupportedConeError",
    "UnsupportedDomainError",
    "agreement_check",
    "axiom_suite_sc",
    "basic_divisor",
    "brute_force_feasible",
    "canonical_json",
    "canonicalize",
    "cancellativity_gate",
    "check_p_matrix",
    "closedness_check",
    "dedekind_forced",
    "difference_set",
    "divisor_add",
    "divisor_eq",
    "divisor_leq",
    "divisor_meet",
    "divisor_neg",
    "domain_from_descriptor",
    "feasible",
    "finite_subset",
    "forced_entails",
    "forced_regular_entails",
    "free_entails",
    "from_element",
    "gamma_counterexample_search",
    "group_from_descriptor",
    "groth_abs",
    "groth_add",
    "groth_eq",
    "groth_join",
    "groth_leq",
    "groth_meet",
    "groth_neg",
    "ideal_add",
    "ideal_meet",
    "ideal_member",
    "integer_witness",
    "integral_closure",
    "integral_dependence",
    "lcd_condition_violation",
    "leaf",
    "leq",
    "linearisation_check",
    "macaulay_check",
    "make_certificate",
    "monomial_ideal",
    "multi_forced_entails",
    "negate",
    "nfold",
    "no",
    "order_reflection_check",
    "parse_domain_shorthand",
    "parse_group_shorthand",
    "parse_term",
    "preorder_leq",
    "prufer_entails",
    "regular_axiom_suite",
    "regular_entails",
    "regularity_inequality_check",
    "relation_from_descriptor",
    "riesz_refine",
    "sc_entails",
    "sequent",
    "sign_forcing_search",
    "suite_failures",
    "sumset",
    "term_eq",
    "term_eval",
    "translate",
    "unknown",
    "vec",
    "verify_certificate",
    "verify_witness",
    "yes",
]
