"""Compare the compiled kernels against the pure-Python fallback.

Run as a script:

    python3 benchmarks/bench_kernels.py

The first section times the two kernel implementations directly on
identical inputs.  The second re-runs a batch of end-to-end decisions
in a subprocess with LORENZEN_PURE=1 to show the whole-stack effect.
No third-party dependencies.
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from lorenzen import _kernels, _purekernels  # noqa: E402


def _bench(fn, args_list, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_minimal_mask(rng):
    cases = []
    for _ in range(400):
        n = rng.randint(4, 40)
        d = rng.randint(1, 4)
        cases.append(([[rng.randint(-6, 6) for _ in range(d)] for _ in range(n)],))
    return cases


def bench_enum_feasible(rng):
    cases = []
    for _ in range(300):
        m = rng.randint(2, 6)
        d = rng.randint(1, 3)
        cols = [[rng.randint(-4, 4) for _ in range(d)] for _ in range(m)]
        cases.append((cols, 6))
    return cases


WORKLOAD = r"""
import random, time
from lorenzen.regular import free_entails, sequent
from lorenzen.groups import ProductOrder
from lorenzen.feasibility import FeasibilityProblem, brute_force_feasible
rng = random.Random(0)
t0 = time.perf_counter()
for _ in range(600):
    rank = rng.randint(1, 3)
    G = ProductOrder(rank)
    A = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(rng.randint(1, 3))]
    B = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(rng.randint(1, 3))]
    s = sequent(A, B)
    free_entails(G, s)
    cols = tuple(tuple(x - y for x, y in zip(a, b)) for a in s.A for b in s.B)
    brute_force_feasible(FeasibilityProblem(cols, G), 6)
print("%.3f" % (time.perf_counter() - t0))
"""


def run_workload(pure):
    env = dict(os.environ)
    if pure:
        env["LORENZEN_PURE"] = "1"
    else:
        env.pop("LORENZEN_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], capture_output=True, text=True, env=env
    )
    return float(out.stdout.strip())


def main():
    rng = random.Random(0)
    print("kernel microbenchmarks (best of 3)")
    if not _kernels.HAVE_SPEEDUPS:
        print("  compiled kernels unavailable; pure path only")
    for name, cases in (
        ("minimal_mask", bench_minimal_mask(rng)),
        ("enum_feasible", bench_enum_feasible(rng)),
    ):
        pure_fn = getattr(_purekernels, name)
        t_pure = _bench(pure_fn, cases)
        line = "  %-14s pure %7.1f ms" % (name, t_pure * 1000)
        if _kernels.HAVE_SPEEDUPS:
            fast_fn = getattr(_kernels._speedups, name)
            t_fast = _bench(fast_fn, cases)
            line += "   compiled %7.1f ms   speedup %4.1fx" % (
                t_fast * 1000,
                t_pure / t_fast if t_fast > 0 else float("inf"),
            )
        print(line)
        if _kernels.HAVE_SPEEDUPS:
            for args in cases[:50]:
                assert pure_fn(*args) == fast_fn(*args)

    print("end-to-end decision batch (600 sequents, oracle included)")
    t_default = run_workload(pure=False)
    t_pure = run_workload(pure=True)
    print("  default path %6.2f s" % t_default)
    print("  LORENZEN_PURE=1 %4.2f s" % t_pure)
    if _kernels.HAVE_SPEEDUPS and t_default > 0:
        print("  whole-stack speedup %.1fx" % (t_pure / t_default))


if __name__ == "__main__":
    main()
