"""Compare the compiled row-reduction kernel with the pure-Python fallback.

Two measurements:

* micro: echelon + back substitution of random sparse rational rows, calling
  both implementations in-process;
* macro: a full ``qda`` command in a subprocess, once per backend
  (``QDA_PURE_PYTHON=1`` selects the fallback).

Usage: ``python benchmarks/bench_kernel.py [--repeat K] [--spec FILE] [--max-degree N]``
"""

import argparse
import os
import pathlib
import random
import subprocess
import sys
import time

from qda import _kernel_py
from qda.exactnum import mpq

try:
    from qda import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

ROOT = pathlib.Path(__file__).resolve().parent.parent


def random_rows(seed, nrows, ncols, density):
    """Random rationals: coefficient growth dominates."""
    rnd = random.Random(seed)
    rows = []
    for _ in range(nrows):
        row = {j: mpq(rnd.randint(-5, 5), rnd.randint(1, 4))
               for j in range(ncols) if rnd.random() < density}
        rows.append({j: x for j, x in row.items() if x})
    return rows


def signed_rows(seed, nrows, ncols, k):
    """``k`` entries of +-1 per row, the shape of relation placements."""
    rnd = random.Random(seed)
    return [{c: mpq(rnd.choice((-1, 1))) for c in rnd.sample(range(ncols), k)}
            for _ in range(nrows)]


def echelon(mod, rows):
    piv = {}
    for r in rows:
        mod.insert_vector(r, piv)
    mod.back_substitute(piv)
    return piv


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def micro(repeat):
    cases = [
        ("rational 150x150 @0.2", random_rows(1, 150, 150, 0.2)),
        ("rational 200x180 @0.05", random_rows(2, 200, 180, 0.05)),
        ("+-1 800x800 k=4", signed_rows(3, 800, 800, 4)),
        ("+-1 3000x4000 k=2", signed_rows(4, 3000, 4000, 2)),
    ]
    print(f"{'case':>24} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for label, rows in cases:
        tp = best_of(lambda: echelon(_kernel_py, rows), repeat)
        if _kernel_c is None:
            print(f"{label:>24} {tp:11.4f} {'n/a':>11} {'':>8}")
            continue
        assert echelon(_kernel_c, rows) == echelon(_kernel_py, rows)
        tc = best_of(lambda: echelon(_kernel_c, rows), repeat)
        print(f"{label:>24} {tp:11.4f} {tc:11.4f} {tp / tc:7.2f}x")


def macro(spec, N, repeat):
    cmd = [sys.executable, "-m", "qda.cli", "poincare", str(spec), "--max-degree", str(N)]
    out = {}
    for backend, extra in (("python", {"QDA_PURE_PYTHON": "1"}), ("cython", {})):
        if backend == "cython" and _kernel_c is None:
            continue
        env = {k: v for k, v in os.environ.items() if k != "QDA_PURE_PYTHON"}
        env.update(extra)

        def call():
            proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
            out[backend] = proc.stdout

        out[backend + "_t"] = best_of(call, repeat)
    print(f"\npoincare {spec.name} N={N}")
    print(f"  python {out['python_t']:.3f}s")
    if "cython_t" in out:
        print(f"  cython {out['cython_t']:.3f}s  ({out['python_t'] / out['cython_t']:.2f}x)")
        print(f"  identical reports: {out['python'] == out['cython']}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--spec", type=pathlib.Path, default=ROOT / "specs" / "flip3.json")
    ap.add_argument("--max-degree", type=int, default=5)
    args = ap.parse_args()
    print(f"compiled kernel available: {_kernel_c is not None}\n")
    micro(args.repeat)
    macro(args.spec, args.max_degree, args.repeat)


if __name__ == "__main__":
    main()
