"""Tri-state decision values with mandatory witnesses.

Searches over unbounded existential quantifiers (forcing depth, Prüfer
auxiliary sets) cannot always answer; a Decision is Yes with a witness,
No, or Unknown carrying the exhausted bound.  A Yes without a witness
is a bug by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ArgumentError

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Decision:
    verdict: str
    witness: object = None
    bound_used: Optional[int] = None

    def __post_init__(self):
        if self.verdict not in (YES, NO, UNKNOWN):
            raise ArgumentError("bad verdict %r" % (self.verdict,))
        if self.verdict == YES and self.witness is None:
            raise ArgumentError("Yes decisions must carry a witness")
        if self.verdict == UNKNOWN and self.bound_used is None:
            raise ArgumentError("Unknown decisions must carry the bound")

    def __bool__(self) -> bool:
        return self.verdict == YES

    @property
    def is_yes(self) -> bool:
        return self.verdict == YES

    @property
    def is_no(self) -> bool:
        return self.verdict == NO

    @property
    def is_unknown(self) -> bool:
        return self.verdict == UNKNOWN

    def as_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness,
            "bound_used": self.bound_used,
        }


def yes(witness) -> Decision:
    return Decision(YES, witness=witness)


def no() -> Decision:
    return Decision(NO)


def unknown(bound: int) -> Decision:
    return Decision(UNKNOWN, bound_used=bound)
