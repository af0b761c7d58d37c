"""Exception types shared across the package."""


class LorenzenError(Exception):
    """Base class for package errors."""


class DimensionError(LorenzenError, ValueError):
    """An element's rank does not match the ambient group."""


class ArgumentError(LorenzenError, ValueError):
    """A structurally invalid argument (empty set, bad bound, sum mismatch)."""


class UnsupportedConeError(LorenzenError, TypeError):
    """The operation does not support this cone kind."""


class UnsupportedDomainError(LorenzenError, TypeError):
    """The operation does not support this monomial domain kind."""


class BoundedRelationError(LorenzenError, RuntimeError):
    """A computation needed a decision the bounded relation could not give.

    Carries the undecided query so callers can raise their budget.
    """

    def __init__(self, message: str, query=None):
        super().__init__(message)
        self.query = query


class CancellativityError(LorenzenError, RuntimeError):
    """The relation's ideal monoid failed Property Gamma; carries the witness."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class InternalCheckError(LorenzenError, AssertionError):
    """A mandatory self-check failed (witness re-verification, engine disagreement)."""


class MalformedInputError(LorenzenError, ValueError):
    """Input JSON/descriptor did not parse or validate."""
