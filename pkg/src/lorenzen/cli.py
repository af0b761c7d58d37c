"""Command-line surface.

Every decision subcommand prints one self-contained JSON certificate on
standard output and exits 0 for Yes, 1 for No, 2 for Unknown.  Usage
errors exit 64, malformed input 65.  Output is deterministic: sorted
keys, compact separators; the only non-reproducible field is
elapsed_ms.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .decision import Decision
from .domains import (
    Divisor,
    basic_divisor,
    divisor_add,
    divisor_eq,
    divisor_leq,
    divisor_meet,
    divisor_neg,
    integral_closure,
    integral_dependence,
    monomial_ideal,
)
from .entailment import (
    DedekindSI,
    FinestSI,
    ForcedRelation,
    RelationHandle,
    axiom_suite_sc,
    suite_failures,
)
from .errors import InternalCheckError, LorenzenError, MalformedInputError
from .groups import finite_subset, lcd_condition_violation, sumset
from .regular import (
    PruferRelation,
    RegularisedSI,
    agreement_check,
    regular_axiom_suite,
    regular_entails,
    sequent,
)
from .serialize import (
    canonical_json,
    decode_element,
    decode_subset,
    encode_element,
    encode_subset,
    make_certificate,
    parse_domain_shorthand,
    parse_group_shorthand,
)
from .verify import verify_certificate

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_MALFORMED = 65

_EXITS = {"yes": EXIT_YES, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(prog="lorenzen", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, rel=True):
        sp.add_argument("--file", help="read the JSON query from a file instead of stdin")
        if rel:
            sp.add_argument("--rel", default="finest", help=(
                "finest | dedekind | regular-finest | regular-dedekind | "
                "prufer-finest | prufer-dedekind | forced-finest | forced-dedekind"))
            sp.add_argument("--group", help="product:N | matrix:[[..]] | semigroup:a,b | trivial:N")
            sp.add_argument("--domain", help="polyring:N | semigroup:a,b | laurent:N | forced-polyring:N@x")
            sp.add_argument("--depth", type=int, default=6)
            sp.add_argument("--bound", type=int, default=4)
            sp.add_argument("--x", action="append", default=[],
                            help="forced element (comma-separated ints); repeatable")

    sp = sub.add_parser("entail", help="decide an entailment and emit its certificate")
    common(sp)
    sp = sub.add_parser("closure", help="integral closure of a monomial ideal")
    sp.add_argument("--file")
    sp.add_argument("--domain", required=True)
    sp.add_argument("--ideal", help="comma-separated rank-1 generators")
    sp = sub.add_parser("divisor", help="Lorenzen divisor arithmetic and comparisons")
    sp.add_argument("--file")
    sp.add_argument("--domain", required=True)
    sp = sub.add_parser("axioms", help="run the axiom suite for a relation")
    common(sp)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("lcd-check", help="check the cone divisibility condition")
    sp.add_argument("--group", required=True)
    sp.add_argument("--search-box", type=int, default=10)
    sp.add_argument("--n-max", type=int, default=6)
    sp = sub.add_parser("agree", help="compare Pruefer and regularised verdicts")
    common(sp)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp = sub.add_parser("verify", help="re-check a certificate")
    sp.add_argument("--certificate", help="certificate file (default: stdin)")
    return p


def _read_query(args) -> dict:
    if getattr(args, "file", None):
        with open(args.file) as fh:
            text = fh.read()
    elif not sys.stdin.isatty():
        text = sys.stdin.read()
    else:
        text = ""
    if not text.strip():
        return {}
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as ex:
        raise MalformedInputError("query is not valid JSON: %s" % ex)
    if not isinstance(obj, dict):
        raise MalformedInputError("query must be a JSON object")
    return obj


def _relation(args) -> RelationHandle:
    name = args.rel
    want_domain = name.endswith("dedekind")
    if want_domain:
        if not args.domain:
            raise MalformedInputError("--rel %s requires --domain" % name)
        base = DedekindSI(parse_domain_shorthand(args.domain))
    else:
        if not args.group:
            raise MalformedInputError("--rel %s requires --group" % name)
        base = FinestSI(parse_group_shorthand(args.group))
    if name in ("finest", "dedekind"):
        return base
    if name in ("regular-finest", "regular-dedekind"):
        return RegularisedSI(base, args.depth)
    if name in ("prufer-finest", "prufer-dedekind"):
        return PruferRelation(base, args.bound)
    if name in ("forced-finest", "forced-dedekind"):
        if not args.x:
            raise MalformedInputError("--rel %s requires at least one --x" % name)
        xs = tuple(_parse_vec(t) for t in args.x)
        return ForcedRelation(base, xs, args.depth)
    raise MalformedInputError("unknown relation %r" % name)


def _parse_vec(text: str):
    try:
        coords = [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise MalformedInputError("bad element %r" % text)
    if not coords:
        raise MalformedInputError("empty element %r" % text)
    return tuple(coords)


def _emit(cert: dict) -> int:
    sys.stdout.write(canonical_json(cert))
    return _EXITS[cert["verdict"]]


def _decision_fields(d: Decision) -> tuple:
    return d.verdict, d.witness, d.bound_used


def _cmd_entail(args) -> int:
    t0 = time.perf_counter()
    rel = _relation(args)
    query = _read_query(args)
    if "A" not in query:
        raise MalformedInputError("entail query needs an antecedent A")
    A = decode_subset(query["A"])
    multi = isinstance(rel, RegularisedSI)
    if multi:
        if "B" in query:
            B = decode_subset(query["B"])
        elif "b" in query:
            B = (decode_element(query["b"]),)
        else:
            raise MalformedInputError("entail query needs B (or b)")
        d = regular_entails(rel.base, sequent(A, B), rel.depth)
        q = {"A": encode_subset(A), "B": encode_subset(sequent(A, B).B)}
    else:
        if "b" in query:
            b = decode_element(query["b"])
        elif "B" in query and len(query["B"]) == 1:
            b = decode_element(query["B"][0])
        else:
            raise MalformedInputError(
                "relation %s takes a single conclusion b" % args.rel)
        d = rel.entails(A, b)
        q = {"A": encode_subset(A), "b": encode_element(b)}
    verdict, witness, bound = _decision_fields(d)
    cert = make_certificate(
        "entail", q, rel.describe(), verdict, witness, bound,
        _ms(t0))
    return _emit(cert)


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


def _cmd_closure(args) -> int:
    t0 = time.perf_counter()
    dom = parse_domain_shorthand(args.domain)
    if args.ideal:
        # stdin stays untouched here, so `closure --ideal ...` never blocks
        # waiting on a pipe that nobody closes
        gens = finite_subset(_parse_vec(t) for t in args.ideal.split(";"))
    else:
        query = _read_query(args)
        if "gens" not in query:
            raise MalformedInputError("closure needs --ideal or a gens array")
        gens = decode_subset(query["gens"])
    ideal = monomial_ideal(dom, gens)
    closed = integral_closure(ideal)
    members = []
    for b in closed.gens:
        d = integral_dependence(ideal, b)
        if not d.is_yes:
            raise InternalCheckError("closure member %r failed its own test" % (b,))
        members.append({"b": encode_element(b), "k": d.witness["k"],
                        "q": d.witness["q"], "s": d.witness["s"]})
    cert = make_certificate(
        "closure",
        {"gens": encode_subset(ideal.gens)},
        {"rel": "dedekind", "domain": dom.descriptor()},
        "yes",
        {"kind": "integral-closure", "members": members},
        None,
        _ms(t0),
        extra={"closure": encode_subset(closed.gens)},
    )
    return _emit(cert)


def _parse_divisor(dom, obj) -> Divisor:
    if not isinstance(obj, dict):
        raise MalformedInputError("divisor must be an object")
    if "basic" in obj:
        return basic_divisor(dom, decode_subset(obj["basic"]))
    if "pos" in obj:
        D = basic_divisor(dom, decode_subset(obj["pos"]))
        if obj.get("neg"):
            D = divisor_add(D, divisor_neg(basic_divisor(dom, decode_subset(obj["neg"]))))
        return D
    raise MalformedInputError("divisor needs a basic or pos/neg form")


def _encode_divisor(D: Divisor) -> dict:
    return {"pos": encode_subset(D.pos.gens), "neg": encode_subset(D.neg.gens)}


def _leq_witness(dom, D1: Divisor, D2: Divisor) -> dict:
    left = monomial_ideal(dom, sumset(D1.pos.gens, D2.neg.gens))
    per_gen = []
    for y in sumset(D2.pos.gens, D1.neg.gens):
        d = integral_dependence(left, y)
        if not d.is_yes:
            raise InternalCheckError(
                "divisor comparison witness failed for generator %r" % (y,))
        per_gen.append({"b": encode_element(y), "k": d.witness["k"],
                        "q": d.witness["q"], "s": d.witness["s"]})
    return {"kind": "divisor-leq", "over": encode_subset(left.gens),
            "per_gen": per_gen}


def _cmd_divisor(args) -> int:
    t0 = time.perf_counter()
    dom = parse_domain_shorthand(args.domain)
    query = _read_query(args)
    op = query.get("op")
    if op not in ("leq", "eq", "add", "meet", "neg", "basic"):
        raise MalformedInputError("divisor op must be one of leq, eq, add, meet, neg, basic")
    rel_desc = {"rel": "dedekind", "domain": dom.descriptor()}
    if op == "basic":
        if "gens" not in query:
            raise MalformedInputError("divisor op basic needs a gens array")
        gens = decode_subset(query["gens"])
        D = basic_divisor(dom, gens)
        cert = make_certificate(
            "divisor", {"op": op, "gens": encode_subset(gens)},
            rel_desc, "yes", None, None, _ms(t0),
            extra={"divisor": _encode_divisor(D)})
        return _emit(cert)
    D1 = _parse_divisor(dom, query.get("left"))
    q = {"op": op, "left": _encode_divisor(D1)}
    if op == "neg":
        cert = make_certificate("divisor", q, rel_desc, "yes", None, None, _ms(t0),
                                extra={"divisor": _encode_divisor(divisor_neg(D1))})
        return _emit(cert)
    D2 = _parse_divisor(dom, query.get("right"))
    q["right"] = _encode_divisor(D2)
    if op in ("add", "meet"):
        out = divisor_add(D1, D2) if op == "add" else divisor_meet(D1, D2)
        cert = make_certificate("divisor", q, rel_desc, "yes", None, None, _ms(t0),
                                extra={"divisor": _encode_divisor(out)})
        return _emit(cert)
    if op == "leq":
        ok = divisor_leq(D1, D2)
        witness = _leq_witness(dom, D1, D2) if ok else None
        cert = make_certificate("divisor", q, rel_desc,
                                "yes" if ok else "no", witness, None, _ms(t0))
        return _emit(cert)
    ok = divisor_eq(D1, D2)
    witness = None
    if ok:
        witness = {"kind": "divisor-eq",
                   "forward": _leq_witness(dom, D1, D2),
                   "backward": _leq_witness(dom, D2, D1)}
    cert = make_certificate("divisor", q, rel_desc,
                            "yes" if ok else "no", witness, None, _ms(t0))
    return _emit(cert)


def _cmd_axioms(args) -> int:
    t0 = time.perf_counter()
    rel = _relation(args)
    if isinstance(rel, RegularisedSI):
        report = regular_axiom_suite(rel.base, args.samples, args.seed,
                                     depth=rel.depth)
    else:
        report = axiom_suite_sc(rel, args.samples, args.seed)
    bad = suite_failures(report)
    cert = make_certificate(
        "axioms", {"samples": args.samples, "seed": args.seed},
        rel.describe(), "yes" if not bad else "no", report, None, _ms(t0))
    return _emit(cert)


def _cmd_lcd(args) -> int:
    t0 = time.perf_counter()
    G = parse_group_shorthand(args.group)
    hit = lcd_condition_violation(G, args.search_box, args.n_max)
    if hit is None:
        verdict, witness = "yes", None
    else:
        a, n = hit
        verdict = "no"
        witness = {"kind": "lcd-violation", "a": encode_element(a), "n": n}
    cert = make_certificate(
        "lcd-check", {"search_box": args.search_box, "n_max": args.n_max},
        G.descriptor(), verdict, witness, None, _ms(t0))
    return _emit(cert)


def _cmd_agree(args) -> int:
    t0 = time.perf_counter()
    rel = _relation(args)
    if not isinstance(rel, (FinestSI, DedekindSI)):
        raise MalformedInputError("agree runs over a finest or dedekind base")
    report = agreement_check(rel, args.samples, args.seed,
                             bounds=(args.bound, args.depth))
    ok = not report["violations"]
    cert = make_certificate(
        "agree", {"samples": args.samples, "seed": args.seed},
        rel.describe(), "yes" if ok else "no", report, None, _ms(t0))
    return _emit(cert)


def _cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.certificate:
        with open(args.certificate) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        cert = json.loads(text)
    except json.JSONDecodeError as ex:
        raise MalformedInputError("certificate is not valid JSON: %s" % ex)
    ok, msg = verify_certificate(cert)
    out = make_certificate(
        "verify", {"command": cert.get("command") if isinstance(cert, dict) else None},
        cert.get("relation") if isinstance(cert, dict) else None,
        "yes" if ok else "no",
        {"kind": "verification", "message": msg},
        None, _ms(t0))
    return _emit(out)


_COMMANDS = {
    "entail": _cmd_entail,
    "closure": _cmd_closure,
    "divisor": _cmd_divisor,
    "axioms": _cmd_axioms,
    "lcd-check": _cmd_lcd,
    "agree": _cmd_agree,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except MalformedInputError as ex:
        sys.stderr.write(canonical_json({"error": str(ex)}))
        return EXIT_MALFORMED
    except FileNotFoundError as ex:
        sys.stderr.write(canonical_json({"error": str(ex)}))
        return EXIT_MALFORMED
    except LorenzenError as ex:
        sys.stderr.write(canonical_json({"error": "%s: %s" % (type(ex).__name__, ex)}))
        return EXIT_MALFORMED


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
