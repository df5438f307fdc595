"""Benchmark the numba kernels against the pure-numpy fallback.

Run:
    python benchmarks/bench_kernels.py [--repeats 50]

Times the raw kernels on representative shapes (the suite workloads:
|K| <= 6 rows, dim <= 8, 2049-point sweeps, 360-direction polar scans)
and one end-to-end oracle-agreement pass per backend.
"""

import argparse
import time

import numpy as np

from bjg import _kernels_numba as knb
from bjg import _kernels_numpy as knp

NO_W = np.empty(0)


def timeit(fn, repeats):
    fn()  # warmup (JIT compile / cache touch)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeats):
    rng = np.random.default_rng(0)
    F = rng.uniform(-1, 1, (6, 8))
    G = rng.uniform(-1, 1, (6, 8))
    FC = F + 1j * rng.uniform(-1, 1, (6, 8))
    GC = G + 1j * rng.uniform(-1, 1, (6, 8))
    lams = np.linspace(-4, 4, 2049)
    ts = np.exp(1j * 2 * np.pi * np.arange(360) / 360)

    cases = [
        ("row_norms lp2 (6x8)", lambda k: k.row_norms(F, 0, 2.0, NO_W)),
        ("pencil_values sup 2049", lambda k: k.pencil_values(F, G, lams, 1, 0.0, NO_W)),
        ("pencil_values lp2 2049", lambda k: k.pencil_values(F, G, lams, 0, 2.0, NO_W)),
        ("pencil_min sup", lambda k: k.pencil_min(F, G, -4.0, 4.0, 1, 0.0, NO_W, 200, 1e-12)),
        ("polar_min lp2 360 dirs", lambda k: k.polar_min(FC, GC, ts, 4.0, 0, 2.0, NO_W, 200, 1e-12)),
    ]
    print(f"{'kernel':28s} {'numpy':>12s} {'numba':>12s} {'speedup':>9s}")
    for name, call in cases:
        t_np = timeit(lambda: call(knp), repeats)
        t_nb = timeit(lambda: call(knb), repeats)
        print(f"{name:28s} {t_np * 1e6:10.1f}us {t_nb * 1e6:10.1f}us {t_np / t_nb:8.1f}x")


def bench_end_to_end(repeats):
    import os
    import subprocess
    import sys

    code = (
        "from bjg.harness import run_suite, SuiteConfig\n"
        "run_suite('oracle-agreement-real', SuiteConfig(seed=9, trials=20))\n"
        "r = run_suite('oracle-agreement-real', SuiteConfig(seed=1, trials=500))\n"
        "print(f'{r.elapsed:.3f}')\n"
    )
    print(f"\n{'oracle-agreement-real x500':28s}", end=" ")
    for backend in ("numpy", "numba"):
        env = dict(os.environ, BJG_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        print(f"{backend}: {float(out.stdout.strip()):6.2f}s", end="  ")
    print()


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=50)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    bench_kernels(args.repeats)
    if not args.skip_end_to_end:
        bench_end_to_end(args.repeats)
