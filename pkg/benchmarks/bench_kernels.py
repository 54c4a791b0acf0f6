"""Compare the compiled F_p kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one line per kernel with the best wall time of each backend, and
checks that both backends return identical results.  The last row runs the
exhaustive M_2(F_2) oracle end to end in a subprocess per backend.
"""
import argparse
import itertools
import os
import random
import subprocess
import sys
import time

from maxcomm import _pykernels
from maxcomm.oracle import all_matrices

try:
    from maxcomm import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def tables(p, n):
    elems = all_matrices(p, n)
    index = {e: t for t, e in enumerate(elems)}
    add = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems]
    mul = [[index[_pykernels.matmul_modp(a, b, n, p)] for b in elems] for a in elems]
    one = index[tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))]
    return add, mul, len(elems), index[(0,) * (n * n)], one


def cases():
    rng = random.Random(0)
    rows = [[rng.randrange(7) for _ in range(40)] for _ in range(60)]
    yield "rref_modp 60x40 F7", lambda k: k.rref_modp(rows, 40, 7)
    mats = all_matrices(2, 3)
    yield "commuting_pairs M3(F2)", lambda k: k.commuting_pairs(mats, 3, 2)
    pairs = list(itertools.combinations(mats[:120], 2))
    yield "closure_modp 7140 pairs M3(F2)", lambda k: [k.closure_modp(list(t), 3, 2) for t in pairs]
    add, mul, m, zero, one = tables(2, 2)
    yield "enumerate_subrings M2(F2) unital", lambda k: k.enumerate_subrings(add, mul, m, zero, one, True)
    yield "enumerate_subrings M2(F2) rng", lambda k: k.enumerate_subrings(add, mul, m, zero, one, False)


def oracle_time(pure):
    env = dict(os.environ)
    if pure:
        env["MAXCOMM_PURE_PYTHON"] = "1"
    cmd = [sys.executable, "-m", "maxcomm.cli", "enumerate", "--p", "2", "--n", "2"]
    t0 = time.perf_counter()
    subprocess.run(cmd, env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':38s} {'cython':>10s} {'python':>10s} {'speedup':>8s}")
    for name, fn in cases():
        tp, rp = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:38s} {'-':>10s} {tp:10.4f}")
            continue
        tc, rc = best_of(lambda: fn(_ckernels), args.repeat)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:38s} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")
    tp = oracle_time(True)
    tc = oracle_time(False) if _ckernels is not None else float("nan")
    print(f"{'exhaustive oracle M2(F2), process':38s} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
