"""Canonical JSON encoding for queries, relations and certificates.

Certificates are self-contained: they embed the relation descriptor and
the query, so a third party can re-check the witness without the
original invocation.  Serialisation is deterministic: sorted keys,
compact separators, one trailing newline.  Group elements of rank one
are encoded as bare integers, higher ranks as arrays.
"""

from __future__ import annotations

import json

from .domains import MonomialDomain, domain_from_descriptor
from .entailment import DedekindSI, FinestSI, ForcedRelation, RelationHandle
from .errors import MalformedInputError
from .groups import OrderedGroup, Subset, Vec, as_vec, finite_subset, group_from_descriptor
from .regular import PruferRelation, RegularisedSI

CERT_FORMAT = "lorenzen-certificate/1"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def encode_element(v: Vec):
    v = as_vec(v)
    return v[0] if len(v) == 1 else list(v)


def encode_subset(A: Subset) -> list:
    return [encode_element(v) for v in finite_subset(A)]


def decode_element(x) -> Vec:
    if isinstance(x, bool):
        raise MalformedInputError("group elements must be integers, got a boolean")
    if isinstance(x, int):
        return (x,)
    if isinstance(x, (list, tuple)) and x and all(
        isinstance(c, int) and not isinstance(c, bool) for c in x
    ):
        return tuple(x)
    raise MalformedInputError("not a group element: %r" % (x,))


def decode_subset(xs) -> Subset:
    if not isinstance(xs, (list, tuple)) or not xs:
        raise MalformedInputError("expected a nonempty array of group elements")
    return finite_subset(decode_element(x) for x in xs)


def relation_from_descriptor(desc: dict) -> RelationHandle:
    """Rebuild a relation handle from its describe() dictionary."""
    if not isinstance(desc, dict) or "rel" not in desc:
        raise MalformedInputError("relation descriptor must carry a 'rel' key")
    kind = desc["rel"]
    try:
        if kind == "finest":
            return FinestSI(group_from_descriptor(desc["group"]))
        if kind == "dedekind":
            return DedekindSI(domain_from_descriptor(desc["domain"]))
        if kind == "forced":
            # a chain of nested forcings folds back into one handle
            xs = []
            inner = desc
            while isinstance(inner, dict) and inner.get("rel") == "forced":
                xs.append(decode_element(inner["x"]))
                inner = inner["base"]
            return ForcedRelation(
                relation_from_descriptor(inner), tuple(xs), int(desc["depth"])
            )
        if kind == "regular":
            return RegularisedSI(relation_from_descriptor(desc["base"]), int(desc["depth"]))
        if kind == "prufer":
            return PruferRelation(relation_from_descriptor(desc["base"]), int(desc["bound"]))
    except KeyError as ex:
        raise MalformedInputError("relation descriptor missing field %s" % ex)
    raise MalformedInputError("unknown relation kind %r" % kind)


def make_certificate(command: str, query: dict, relation: dict,
                     verdict: str, witness, bound_used, elapsed_ms: float,
                     extra: dict = None) -> dict:
    cert = {
        "format": CERT_FORMAT,
        "command": command,
        "query": query,
        "relation": relation,
        "verdict": verdict,
        "witness": witness,
        "bound_used": bound_used,
        "elapsed_ms": elapsed_ms,
    }
    if extra:
        cert.update(extra)
    return cert


# ---------------------------------------------------------------------------
# command-line shorthands

def parse_group_shorthand(text: str) -> OrderedGroup:
    """product:2 | matrix:[[1,1]] | semigroup:2,3 | trivial:1"""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    try:
        if kind == "product":
            return group_from_descriptor({"kind": "product", "rank": int(rest)})
        if kind == "trivial":
            return group_from_descriptor({"kind": "trivial", "rank": int(rest)})
        if kind == "semigroup":
            gens = [int(g) for g in rest.split(",") if g.strip()]
            return group_from_descriptor({"kind": "semigroup", "gens": gens})
        if kind == "matrix":
            rows = json.loads(rest)
            return group_from_descriptor({"kind": "matrix", "rows": rows})
    except MalformedInputError:
        raise
    except (ValueError, TypeError) as ex:
        raise MalformedInputError("bad group shorthand %r: %s" % (text, ex))
    raise MalformedInputError("unknown group shorthand %r" % text)


def parse_domain_shorthand(text: str) -> MonomialDomain:
    """polyring:2 | semigroup:2,3 | laurent:2 | forced-polyring:2@1,-2"""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    try:
        if kind == "polyring":
            return domain_from_descriptor({"kind": "polyring", "rank": int(rest)})
        if kind == "laurent":
            return domain_from_descriptor({"kind": "laurent", "step": int(rest)})
        if kind == "semigroup":
            gens = [int(g) for g in rest.split(",") if g.strip()]
            return domain_from_descriptor({"kind": "semigroup", "gens": gens})
        if kind == "forced-polyring":
            rank_part, _, x_part = rest.partition("@")
            x = [int(c) for c in x_part.split(",") if c.strip()]
            return domain_from_descriptor(
                {"kind": "forced-polyring", "rank": int(rank_part), "x": x}
            )
    except MalformedInputError:
        raise
    except (ValueError, TypeError) as ex:
        raise MalformedInputError("bad domain shorthand %r: %s" % (text, ex))
    raise MalformedInputError("unknown domain shorthand %r" % text)
