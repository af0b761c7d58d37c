"""Standalone certificate checker.

Re-checks Yes-witnesses by direct arithmetic: order membership for the
group cones and monoid membership for the monomial domains.  No
decision procedure from the rest of the package is invoked, so a
certificate audit does not trust the code that produced it.  Verdicts
No and Unknown carry no witness and are accepted on schema alone
(except that an lcd violation witness, when present, is re-checked).
"""

from __future__ import annotations

from .domains import domain_from_descriptor
from .errors import LorenzenError, MalformedInputError
from .groups import (
    group_from_descriptor,
    finite_subset,
    sumset,
    translate,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    zero,
)

_VERDICTS = ("yes", "no", "unknown")
_TOP_KEYS = ("format", "command", "query", "relation", "verdict",
             "witness", "bound_used", "elapsed_ms")


def _fail(msg: str) -> tuple:
    return False, msg


def _decode(x):
    if isinstance(x, bool):
        raise MalformedInputError("boolean is not a group element")
    if isinstance(x, int):
        return (x,)
    if isinstance(x, (list, tuple)) and x and all(
        isinstance(c, int) and not isinstance(c, bool) for c in x
    ):
        return tuple(x)
    raise MalformedInputError("not a group element: %r" % (x,))


def _decode_set(xs):
    if not isinstance(xs, (list, tuple)) or not xs:
        raise MalformedInputError("expected a nonempty element array")
    return finite_subset(_decode(x) for x in xs)


def _base_checker(rel_desc):
    """Return (check(a, b) -> bool, explain(a, b) -> str) for a finest
    or dedekind relation descriptor."""
    kind = rel_desc.get("rel")
    if kind == "finest":
        G = group_from_descriptor(rel_desc["group"])
        return (
            lambda a, b: G.leq(a, b),
            lambda a, b: "%r is not below %r in the cone" % (a, b),
        )
    if kind == "dedekind":
        dom = domain_from_descriptor(rel_desc["domain"])
        return (
            lambda a, b: dom.monoid_contains(vec_sub(b, a)),
            lambda a, b: "%r - %r is not in the monoid" % (b, a),
        )
    raise MalformedInputError("unsupported base relation %r" % kind)


def _check_sc_index(rel_desc, A, b, witness) -> tuple:
    if witness.get("kind") != "sc-index":
        return _fail("expected an sc-index witness, got %r" % witness.get("kind"))
    try:
        idx = int(witness["index"])
        elem = _decode(witness["element"])
    except (KeyError, TypeError, ValueError) as ex:
        return _fail("malformed sc-index witness: %s" % ex)
    if idx < 0 or idx >= len(A):
        return _fail("sc-index %d out of range for a set of %d" % (idx, len(A)))
    if A[idx] != elem:
        return _fail("sc-index element %r does not match set entry %r" % (elem, A[idx]))
    check, explain = _base_checker(rel_desc)
    if not check(elem, b):
        return _fail(explain(elem, b))
    return True, "ok"


def _expand(A, x, p):
    out = set(A)
    shift = zero(len(x))
    for _ in range(p):
        shift = vec_add(shift, x)
        out.update(vec_add(a, shift) for a in A)
    return finite_subset(out)


def _check_forced(rel_desc, xs, A, b, witness) -> tuple:
    """xs given outermost-first; witness carries one p per x.  Any
    p >= 0 is sound, so no depth cap applies here."""
    if witness.get("kind") != "forced":
        return _fail("expected a forced witness, got %r" % witness.get("kind"))
    ps = witness.get("ps")
    if not isinstance(ps, list) or len(ps) != len(xs):
        return _fail("forced witness has %r shift counts for %d forced elements"
                     % (ps, len(xs)))
    U = A
    for x, p in zip(xs, ps):
        if not isinstance(p, int) or p < 0:
            return _fail("forcing shift count %r out of range" % (p,))
        U = _expand(U, x, p)
    return _check_sc_index(rel_desc, U, b, witness.get("inner", {}))


def _cone_explanation(gdesc, combo) -> str:
    kind = gdesc.get("kind")
    if kind in ("product", "trivial"):
        rows = [[1 if i == j else 0 for j in range(len(combo))]
                for i in range(len(combo))]
        if kind == "trivial":
            rows += [[-r for r in row] for row in rows]
    elif kind == "matrix":
        rows = gdesc["rows"]
    else:
        return "combination %r is not below zero in the cone" % (combo,)
    for row in rows:
        val = sum(r * c for r, c in zip(row, combo))
        if val > 0:
            return ("violated inequality row %r: value %d > 0 for combination %r"
                    % (list(row), val, list(combo)))
    return "combination %r rejected by the cone" % (combo,)


def _check_p_matrix(rel_desc, A, B, witness) -> tuple:
    p = witness.get("p")
    if (not isinstance(p, list) or len(p) != len(A)
            or any(not isinstance(r, list) or len(r) != len(B) for r in p)):
        return _fail("p-matrix shape does not match the sequent")
    combo = zero(len(A[0]))
    weight = 0
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            pij = p[i][j]
            if not isinstance(pij, int) or pij < 0:
                return _fail("p-matrix entry p[%d][%d]=%r invalid" % (i, j, pij))
            weight += pij
            combo = vec_add(combo, vec_scale(pij, vec_sub(a, b)))
    if weight == 0:
        return _fail("p-matrix is identically zero")
    base = rel_desc.get("base", rel_desc)
    kind = base.get("rel")
    if kind == "finest":
        G = group_from_descriptor(base["group"])
        if not G.leq(combo, zero(len(combo))):
            return _fail(_cone_explanation(base["group"], combo))
    elif kind == "dedekind":
        dom = domain_from_descriptor(base["domain"])
        if not dom.monoid_contains(vec_neg(combo)):
            return _fail("negated combination %r is not in the monoid"
                         % (list(vec_neg(combo)),))
    else:
        return _fail("p-matrix over unsupported base %r" % kind)
    return True, "ok"


def _check_sign_tree(rel_desc, A, B, witness) -> tuple:
    xs = witness.get("xs")
    branches = witness.get("branches")
    if not isinstance(xs, list) or not isinstance(branches, list):
        return _fail("sign-tree witness needs xs and branches")
    xs = [_decode(x) for x in xs]
    base = rel_desc.get("base", rel_desc)
    C = finite_subset(vec_sub(a, b) for a in A for b in B)
    origin = zero(len(C[0]))
    want = set()
    for signs in _sign_patterns(len(xs)):
        want.add(signs)
    seen = set()
    for branch in branches:
        signs = tuple(branch.get("signs", []))
        if len(signs) != len(xs) or any(s not in (1, -1) for s in signs):
            return _fail("branch signs %r malformed" % (signs,))
        if signs in seen:
            return _fail("duplicate sign branch %r" % (signs,))
        seen.add(signs)
        signed = [vec_scale(s, x) for s, x in zip(signs, xs)]
        ok, msg = _check_forced(base, signed, C, origin, branch.get("witness", {}))
        if not ok:
            return _fail("sign branch %r: %s" % (list(signs), msg))
    if seen != want:
        return _fail("sign branches cover %d of %d required patterns"
                     % (len(seen), len(want)))
    return True, "ok"


def _sign_patterns(m: int):
    if m == 0:
        yield ()
        return
    for rest in _sign_patterns(m - 1):
        yield (1,) + rest
        yield (-1,) + rest


def _check_prufer(rel_desc, A, b, witness) -> tuple:
    X = witness.get("X")
    if not isinstance(X, list) or not X:
        return _fail("Pruefer witness needs a nonempty X")
    X = finite_subset(_decode(x) for x in X)
    base = rel_desc.get("base", rel_desc)
    check, _ = _base_checker(base)
    left = sumset(A, X)
    for y in translate(b, X):
        if not any(check(u, y) for u in left):
            return _fail("no element of A+X lies below %r in the base relation" % (y,))
    return True, "ok"


def _check_integrality(dom, gens, b, w) -> tuple:
    try:
        k = int(w["k"])
        q = [int(c) for c in w["q"]]
        s = _decode(w["s"]) if w["s"] else zero(len(b))
    except (KeyError, TypeError, ValueError) as ex:
        return _fail("malformed integrality witness: %s" % ex)
    if k < 1:
        return _fail("integrality degree k=%d must be at least 1" % k)
    if len(q) != len(gens) or any(c < 0 for c in q):
        return _fail("integrality coefficients %r invalid for %d generators"
                     % (q, len(gens)))
    if sum(q) != k:
        return _fail("integrality coefficients sum to %d, expected k=%d" % (sum(q), k))
    combo = zero(len(b))
    for c, g in zip(q, gens):
        combo = vec_add(combo, vec_scale(c, g))
    residue = vec_sub(vec_scale(k, b), combo)
    if residue != s:
        return _fail("integrality residue mismatch: recomputed %r, witness says %r"
                     % (list(residue), list(s)))
    if not dom.monoid_contains(residue):
        return _fail("integrality residue %r is not in the monoid" % (list(residue),))
    return True, "ok"


def _check_closure(cert) -> tuple:
    dom = domain_from_descriptor(cert["relation"]["domain"])
    gens = _decode_set(cert["query"]["gens"])
    witness = cert["witness"]
    members = witness.get("members")
    closure = cert.get("closure")
    if not isinstance(members, list) or not isinstance(closure, list):
        return _fail("closure certificate needs members and closure arrays")
    listed = finite_subset(_decode(x) for x in closure)
    proved = []
    for entry in members:
        b = _decode(entry["b"])
        ok, msg = _check_integrality(dom, gens, b, entry)
        if not ok:
            return _fail("closure member %r: %s" % (b, msg))
        proved.append(b)
    if finite_subset(proved) != listed:
        return _fail("closure list does not match the proved members")
    return True, "ok"


def _check_divisor_leq(dom, left_div, right_div, w) -> tuple:
    left = sumset(_decode_set(left_div["pos"]), _decode_set(right_div["neg"]))
    right = sumset(_decode_set(right_div["pos"]), _decode_set(left_div["neg"]))
    over = _decode_set(w.get("over", []))
    if not set(over) <= set(left):
        return _fail("witness generators %r are not among the left ideal's" % (over,))
    per_gen = w.get("per_gen")
    if not isinstance(per_gen, list):
        return _fail("divisor witness needs per_gen integrality entries")
    covered = []
    for entry in per_gen:
        b = _decode(entry["b"])
        ok, msg = _check_integrality(dom, over, b, entry)
        if not ok:
            return _fail("generator %r: %s" % (b, msg))
        covered.append(b)
    if not set(right) <= set(covered):
        missing = sorted(set(right) - set(covered))
        return _fail("generators %r of the right ideal lack integrality witnesses"
                     % (missing,))
    return True, "ok"


def _check_divisor(cert) -> tuple:
    query = cert["query"]
    op = query.get("op")
    dom = domain_from_descriptor(cert["relation"]["domain"])
    w = cert["witness"]
    if op == "leq":
        return _check_divisor_leq(dom, query["left"], query["right"], w)
    if op == "eq":
        ok, msg = _check_divisor_leq(dom, query["left"], query["right"],
                                     w.get("forward", {}))
        if not ok:
            return _fail("forward: %s" % msg)
        ok, msg = _check_divisor_leq(dom, query["right"], query["left"],
                                     w.get("backward", {}))
        if not ok:
            return _fail("backward: %s" % msg)
        return True, "ok"
    # computational results (add/meet/neg/basic) carry no witness
    return True, "ok"


def _check_lcd(cert) -> tuple:
    G = group_from_descriptor(cert["relation"])
    w = cert.get("witness")
    if cert["verdict"] == "yes" or not w:
        return True, "ok"
    try:
        a = _decode(w["a"])
        n = int(w["n"])
    except (KeyError, TypeError, ValueError) as ex:
        return _fail("malformed lcd witness: %s" % ex)
    if n < 2:
        return _fail("lcd witness needs n >= 2, got %d" % n)
    if not G.contains(vec_scale(n, a)):
        return _fail("lcd witness: %d*%r is not in the cone" % (n, a))
    if G.contains(a):
        return _fail("lcd witness: %r already lies in the cone" % (a,))
    return True, "ok"


def _check_entail(cert) -> tuple:
    rel = cert["relation"]
    query = cert["query"]
    witness = cert["witness"]
    if not isinstance(witness, dict):
        return _fail("Yes verdict requires a witness object")
    kind = rel.get("rel")
    if kind in ("finest", "dedekind"):
        A = _decode_set(query["A"])
        b = _decode(query["b"])
        return _check_sc_index(rel, A, b, witness)
    if kind == "forced":
        A = _decode_set(query["A"])
        b = _decode(query["b"])
        xs = []
        inner = rel
        while isinstance(inner, dict) and inner.get("rel") == "forced":
            xs.append(_decode(inner["x"]))
            inner = inner["base"]
        return _check_forced(inner, xs, A, b, witness)
    if kind == "regular":
        A = _decode_set(query["A"])
        B = _decode_set(query["B"])
        if witness.get("kind") == "p-matrix":
            return _check_p_matrix(rel, A, B, witness)
        if witness.get("kind") == "sign-tree":
            return _check_sign_tree(rel, A, B, witness)
        return _fail("unsupported regular witness kind %r" % witness.get("kind"))
    if kind == "prufer":
        A = _decode_set(query["A"])
        b = _decode(query["b"])
        return _check_prufer(rel, A, b, witness)
    return _fail("unsupported relation kind %r" % kind)


def verify_certificate(cert) -> tuple:
    """Check a certificate; returns (ok, message)."""
    try:
        if not isinstance(cert, dict):
            return _fail("certificate must be a JSON object")
        missing = [k for k in _TOP_KEYS if k not in cert]
        if missing:
            return _fail("certificate missing keys: %s" % ", ".join(missing))
        if cert["verdict"] not in _VERDICTS:
            return _fail("unknown verdict %r" % cert["verdict"])
        if cert["verdict"] == "unknown":
            if not isinstance(cert["bound_used"], int) or cert["bound_used"] < 0:
                return _fail("Unknown verdict requires a nonnegative bound_used")
            return True, "ok"
        command = cert["command"]
        if command == "lcd-check":
            return _check_lcd(cert)
        if cert["verdict"] == "no":
            return True, "ok"
        if command == "entail":
            return _check_entail(cert)
        if command == "closure":
            return _check_closure(cert)
        if command == "divisor":
            return _check_divisor(cert)
        if command in ("axioms", "agree", "verify"):
            # report-style certificates: the witness is the report itself
            return True, "ok"
        return _fail("unknown command %r" % command)
    except (LorenzenError, KeyError, TypeError, ValueError, IndexError) as ex:
        return _fail("certificate rejected: %s" % ex)
