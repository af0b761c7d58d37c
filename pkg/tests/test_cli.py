"""End-to-end command-line behaviour: exit codes, certificate bodies,
byte determinism, and the verify loop."""

import json
import os
import subprocess
import sys

import pytest


def _body(out):
    return json.loads(out)


class TestEntail:
    def test_yes_exit_zero(self, cli):
        code, out, _ = cli(
            ["entail", "--rel", "regular-finest", "--group", "product:2"],
            '{"A":[[1,0],[0,1]],"B":[[1,1]]}',
        )
        assert code == 0
        cert = _body(out)
        assert cert["verdict"] == "yes"
        assert cert["witness"] == {"kind": "p-matrix", "p": [[1], [0]]}
        assert cert["query"] == {"A": [[0, 1], [1, 0]], "B": [[1, 1]]}

    def test_no_exit_one(self, cli):
        code, out, _ = cli(
            ["entail", "--rel", "finest", "--group", "product:2"],
            '{"A":[[1,1]],"b":[0,0]}',
        )
        assert code == 1 and _body(out)["verdict"] == "no"

    def test_unknown_exit_two(self, cli):
        code, out, _ = cli(
            ["entail", "--rel", "forced-finest", "--group", "semigroup:2,3", "--x", "1"],
            '{"A":[3],"b":0}',
        )
        assert code == 2
        cert = _body(out)
        assert cert["verdict"] == "unknown" and cert["bound_used"] == 6

    def test_dedekind_relation(self, cli):
        code, out, _ = cli(
            ["entail", "--rel", "dedekind", "--domain", "semigroup:2,3"],
            '{"A":[2,3],"b":5}',
        )
        assert code == 0 and _body(out)["witness"]["kind"] == "sc-index"

    def test_prufer_relation(self, cli):
        code, out, _ = cli(
            ["entail", "--rel", "prufer-finest", "--group", "product:2"],
            '{"A":[[0,0]],"b":[1,1]}',
        )
        assert code == 0 and _body(out)["witness"]["kind"] == "prufer-X"

    def test_regular_accepts_singleton_b(self, cli):
        code, out, _ = cli(
            ["entail", "--rel", "regular-dedekind", "--domain", "semigroup:2,3"],
            '{"A":[0],"b":1}',
        )
        assert code == 0 and _body(out)["witness"]["p"] == [[2]]

    def test_single_conclusion_rejects_wide_b(self, cli):
        code, _, err = cli(
            ["entail", "--rel", "finest", "--group", "product:2"],
            '{"A":[[0,0]],"B":[[1,1],[2,2]]}',
        )
        assert code == 65 and "single conclusion" in err

    def test_missing_antecedent(self, cli):
        code, _, err = cli(
            ["entail", "--rel", "finest", "--group", "product:2"], '{"b":[0,0]}'
        )
        assert code == 65

    def test_forced_needs_x(self, cli):
        code, _, err = cli(
            ["entail", "--rel", "forced-finest", "--group", "product:2"],
            '{"A":[[0,0]],"b":[0,0]}',
        )
        assert code == 65 and "--x" in err

    def test_byte_determinism(self, cli):
        argv = ["entail", "--rel", "regular-finest", "--group", "product:2"]
        body = '{"A":[[1,0],[0,1]],"B":[[1,1]]}'
        outs = []
        for _ in range(2):
            _, out, _ = cli(argv, body)
            cert = _body(out)
            del cert["elapsed_ms"]
            outs.append(json.dumps(cert, sort_keys=True))
        assert outs[0] == outs[1]


class TestClosure:
    def test_cusp_ideal(self, cli):
        code, out, _ = cli(["closure", "--domain", "semigroup:2,3", "--ideal", "3"])
        assert code == 0
        cert = _body(out)
        assert cert["closure"] == [3, 4]
        assert cert["witness"]["kind"] == "integral-closure"
        assert [m["b"] for m in cert["witness"]["members"]] == [3, 4]

    def test_plane_ideal_via_json(self, cli):
        code, out, _ = cli(
            ["closure", "--domain", "polyring:2"], '{"gens":[[3,0],[0,3]]}'
        )
        assert code == 0
        assert _body(out)["closure"] == [[0, 3], [1, 2], [2, 1], [3, 0]]

    def test_multiple_shorthand_generators(self, cli):
        code, out, _ = cli(["closure", "--domain", "semigroup:2,3", "--ideal", "2;3"])
        assert code == 0 and _body(out)["closure"] == [2, 3]

    def test_missing_generators(self, cli):
        code, _, err = cli(["closure", "--domain", "semigroup:2,3"], "{}")
        assert code == 65


class TestDivisor:
    def test_zero_below_divisor_of_t(self, cli):
        code, out, _ = cli(
            ["divisor", "--domain", "semigroup:2,3"],
            '{"op":"leq","left":{"basic":[0]},"right":{"pos":[3],"neg":[2]}}',
        )
        assert code == 0
        assert _body(out)["witness"]["kind"] == "divisor-leq"

    def test_strict_direction_fails(self, cli):
        code, out, _ = cli(
            ["divisor", "--domain", "semigroup:2,3"],
            '{"op":"leq","left":{"pos":[3],"neg":[2]},"right":{"basic":[0]}}',
        )
        assert code == 1 and _body(out)["verdict"] == "no"

    def test_meet_returns_the_closed_union(self, cli):
        code, out, _ = cli(
            ["divisor", "--domain", "polyring:2"],
            '{"op":"meet","left":{"basic":[[3,0]]},"right":{"basic":[[0,3]]}}',
        )
        assert code == 0
        assert _body(out)["divisor"]["pos"] == [[0, 3], [1, 2], [2, 1], [3, 0]]

    def test_eq_emits_both_directions(self, cli):
        code, out, _ = cli(
            ["divisor", "--domain", "semigroup:2,3"],
            '{"op":"eq","left":{"pos":[3],"neg":[2]},"right":{"pos":[1],"neg":[0]}}',
        )
        assert code == 0
        w = _body(out)["witness"]
        assert w["kind"] == "divisor-eq" and "forward" in w and "backward" in w

    def test_bad_op(self, cli):
        code, _, err = cli(["divisor", "--domain", "polyring:2"], '{"op":"frob"}')
        assert code == 65


class TestSuites:
    def test_axioms_single_conclusion(self, cli):
        code, out, _ = cli(
            ["axioms", "--rel", "finest", "--group", "product:2", "--samples", "60"]
        )
        assert code == 0
        names = [a["axiom"] for a in _body(out)["witness"]["axioms"]]
        assert names == ["S0", "S1", "S2", "S3", "S4"]

    def test_axioms_regular(self, cli):
        code, out, _ = cli(
            ["axioms", "--rel", "regular-finest", "--group", "product:1", "--samples", "40"]
        )
        assert code == 0
        names = [a["axiom"] for a in _body(out)["witness"]["axioms"]]
        assert names == ["R0", "R1", "R2", "R3", "R4", "R5"]

    def test_lcd_violation(self, cli):
        code, out, _ = cli(["lcd-check", "--group", "semigroup:2,3"])
        assert code == 1
        cert = _body(out)
        assert cert["witness"] == {"kind": "lcd-violation", "a": 1, "n": 2}

    def test_lcd_clean(self, cli):
        code, out, _ = cli(["lcd-check", "--group", "product:2"])
        assert code == 0 and _body(out)["verdict"] == "yes"

    def test_agree(self, cli):
        code, out, _ = cli(
            ["agree", "--rel", "finest", "--group", "product:2", "--samples", "40"]
        )
        assert code == 0
        assert _body(out)["witness"]["violations"] == []


class TestVerifyCommand:
    def test_round_trip(self, cli, tmp_path):
        _, out, _ = cli(
            ["entail", "--rel", "regular-finest", "--group", "product:2"],
            '{"A":[[1,0],[0,1]],"B":[[1,1]]}',
        )
        path = tmp_path / "cert.json"
        path.write_text(out)
        code, vout, _ = cli(["verify", "--certificate", str(path)])
        assert code == 0 and _body(vout)["witness"]["message"] == "ok"

    def test_tampered_certificate(self, cli, tmp_path):
        _, out, _ = cli(
            ["entail", "--rel", "regular-finest", "--group", "product:2"],
            '{"A":[[1,0],[0,1]],"B":[[1,1]]}',
        )
        cert = _body(out)
        cert["query"]["B"] = [[1, -1]]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(cert))
        code, vout, _ = cli(["verify", "--certificate", str(path)])
        assert code == 1
        assert "violated inequality row" in _body(vout)["witness"]["message"]

    def test_stdin_verify(self, cli):
        _, out, _ = cli(["closure", "--domain", "semigroup:2,3", "--ideal", "2"])
        code, _, _ = cli(["verify"], out)
        assert code == 0

    def test_malformed_json(self, cli):
        code, _, err = cli(["verify"], "not json {")
        assert code == 65

    def test_missing_file(self, cli):
        code, _, _ = cli(["verify", "--certificate", "/nonexistent/cert.json"])
        assert code == 65

    def test_full_corpus_round_trips(self, cli):
        # every certificate any subcommand emits must verify
        emitted = []
        for argv, body in [
            (["entail", "--rel", "finest", "--group", "product:2"], '{"A":[[0,0]],"b":[1,1]}'),
            (["entail", "--rel", "finest", "--group", "product:2"], '{"A":[[1,1]],"b":[0,0]}'),
            (["entail", "--rel", "dedekind", "--domain", "semigroup:2,3"], '{"A":[2],"b":9}'),
            (["entail", "--rel", "dedekind", "--domain", "laurent:2"], '{"A":[1],"b":-7}'),
            (["entail", "--rel", "regular-finest", "--group", "matrix:[[1,1]]"], '{"A":[[2,-1]],"B":[[0,1]]}'),
            (["entail", "--rel", "regular-finest", "--group", "trivial:2"], '{"A":[[1,0],[0,1]],"B":[[1,1],[0,0]]}'),
            (["entail", "--rel", "regular-dedekind", "--domain", "semigroup:2,3"], '{"A":[0],"B":[1]}'),
            (["entail", "--rel", "prufer-dedekind", "--domain", "semigroup:2,3"], '{"A":[2,3],"b":5}'),
            (["entail", "--rel", "forced-finest", "--group", "product:2", "--x=-1,-1"], '{"A":[[2,2]],"b":[0,0]}'),
            (["entail", "--rel", "forced-dedekind", "--domain", "semigroup:2,3", "--x", "5"], '{"A":[2],"b":7}'),
            (["closure", "--domain", "semigroup:2,3", "--ideal", "3"], ""),
            (["closure", "--domain", "polyring:2"], '{"gens":[[2,1],[0,3]]}'),
            (["divisor", "--domain", "semigroup:2,3"], '{"op":"leq","left":{"basic":[0]},"right":{"pos":[3],"neg":[2]}}'),
            (["divisor", "--domain", "polyring:2"], '{"op":"eq","left":{"basic":[[1,0],[0,1]]},"right":{"basic":[[0,1],[1,0]]}}'),
            (["divisor", "--domain", "polyring:2"], '{"op":"add","left":{"basic":[[1,0]]},"right":{"basic":[[0,1]]}}'),
            (["divisor", "--domain", "polyring:2"], '{"op":"neg","left":{"basic":[[1,1]]}}'),
            (["divisor", "--domain", "polyring:2"], '{"op":"basic","gens":[[2,0],[1,1]]}'),
            (["lcd-check", "--group", "semigroup:2,3"], ""),
            (["lcd-check", "--group", "product:2"], ""),
            (["axioms", "--rel", "finest", "--group", "product:1", "--samples", "30"], ""),
            (["agree", "--rel", "finest", "--group", "product:1", "--samples", "20"], ""),
        ]:
            code, out, err = cli(argv, body)
            assert code in (0, 1, 2), (argv, err)
            emitted.append(out)
        for out in emitted:
            code, vout, _ = cli(["verify"], out)
            assert code == 0, (out, vout)


class TestUsageErrors:
    def test_unknown_subcommand(self, cli):
        code, _, _ = cli(["frobnicate"])
        assert code == 64

    def test_no_subcommand(self, cli):
        code, _, _ = cli([])
        assert code == 64

    def test_unknown_relation_name(self, cli):
        code, _, _ = cli(
            ["entail", "--rel", "bogus", "--group", "product:2"], '{"A":[[0,0]],"b":[0,0]}'
        )
        assert code == 65

    def test_rel_without_group(self, cli):
        code, _, err = cli(["entail", "--rel", "finest"], '{"A":[[0,0]],"b":[0,0]}')
        assert code == 65 and "--group" in err

    def test_help_exits_zero(self, cli):
        code, _, _ = cli(["--help"])
        assert code == 0


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "lorenzen", "closure", "--domain", "semigroup:2,3", "--ideal", "3"],
        input="",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["closure"] == [3, 4]


def test_closure_ideal_flag_does_not_read_stdin():
    # stdin is a pipe that never sees data or EOF; with --ideal the command
    # must not touch it, so it finishes instead of blocking forever
    r, w = os.pipe()
    try:
        proc = subprocess.run(
            [sys.executable, "-m", "lorenzen", "closure", "--domain", "semigroup:2,3", "--ideal", "3"],
            stdin=r,
            capture_output=True,
            text=True,
            timeout=30,
        )
    finally:
        os.close(r)
        os.close(w)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["closure"] == [3, 4]
