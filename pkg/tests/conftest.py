import io
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest


@pytest.fixture
def cli():
    """Invoke the command line in-process; returns (exit, stdout, stderr)."""
    from lorenzen.cli import run

    def invoke(argv, stdin_text=""):
        out, err = io.StringIO(), io.StringIO()
        old_stdin = sys.stdin
        sys.stdin = io.StringIO(stdin_text)
        try:
            with redirect_stdout(out), redirect_stderr(err):
                code = run(argv)
        finally:
            sys.stdin = old_stdin
        return code, out.getvalue(), err.getvalue()

    return invoke
