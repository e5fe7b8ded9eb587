"""Compare the numba and numpy kernels, plus an end-to-end run under each backend.

    python benchmarks/bench_kernels.py [--quick]

Kernel timings are warm (the JIT is triggered before timing). The end-to-end
section runs a small and a large workload in subprocesses with and without
STARRES_NO_NUMBA; the JIT only engages on the large one.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from starres import _kernels


def best(fn, repeat=5):
    n, _ = timeit.Timer(fn).autorange()
    return min(timeit.repeat(fn, number=n, repeat=repeat)) / n


def bench_rank(sizes, p=32003):
    rng = np.random.default_rng(0)
    print(f"rank mod {p} (square, dense)")
    print(f"{'size':>6} {'numpy':>12} {'numba':>12} {'speedup':>8}")
    for s in sizes:
        A = rng.integers(0, p, size=(s, s))
        _kernels.rank_mod_p_numba(A, p)
        a = best(lambda: _kernels.rank_mod_p_numpy(A, p))
        b = best(lambda: _kernels.rank_mod_p_numba(A, p))
        print(f"{s:>6} {a * 1e6:>10.1f}us {b * 1e6:>10.1f}us {a / b:>7.1f}x")


def bench_masks(sizes, n=6):
    rng = np.random.default_rng(1)
    print(f"divisibility masks ({n} variables, grid x basis)")
    print(f"{'size':>6} {'numpy':>12} {'numba':>12} {'speedup':>8}")
    for s in sizes:
        D = rng.integers(0, 4, size=(s, n))
        G = rng.integers(0, 4, size=(s, n))
        _kernels.divisibility_masks_numba(D, G)
        a = best(lambda: _kernels.divisibility_masks_numpy(D, G))
        b = best(lambda: _kernels.divisibility_masks_numba(D, G))
        print(f"{s:>6} {a * 1e6:>10.1f}us {b * 1e6:>10.1f}us {a / b:>7.1f}x")


LARGE = ("import time, random; from starres.field import using_field; from starres.checks import random_ideal\n"
         "from starres.star import taylor_direct; from starres.complexes import verify_resolution, betti_numbers\n"
         "rng = random.Random(5); I = random_ideal(rng, 6, 3, 14)\n"
         "while len(I) < 12: I = random_ideal(rng, 6, 3, 14)\n"
         "t = time.perf_counter()\n"
         "with using_field('prime:32003'):\n"
         "    T = taylor_direct(I); ok = bool(verify_resolution(T, I)); B = betti_numbers(T)\n"
         "print(f'{time.perf_counter()-t:.2f}s ok={ok} betti={B.totals()}')")


def _run(label, code):
    print(label)
    for name, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, STARRES_NO_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        print(f"  {name:>6}: {out.stdout.strip()}")


def end_to_end(count, large=True):
    code = ("import time; from starres.field import using_field; from starres.checks import run_fuzz_corpus\n"
            "t=time.perf_counter()\n"
            "with using_field('prime:32003'): r=run_fuzz_corpus(seed=42, count=%d)\n"
            "print(f'{time.perf_counter()-t:.2f}s ok={r[\"ok\"]}')" % count)
    _run(f"end to end: fuzz corpus, {count} triples, field prime:32003", code)
    if large:
        _run("end to end: Taylor complex of a 12-generator ideal (4096 basis elements)", LARGE)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        sys.exit("numba is not installed")
    sizes = [4, 16, 64] if args.quick else [4, 8, 16, 32, 64, 128, 256]
    bench_rank(sizes)
    print()
    bench_masks([16, 256, 1024] if args.quick else [16, 64, 256, 1024, 4096])
    print()
    end_to_end(10 if args.quick else 50, large=not args.quick)


if __name__ == "__main__":
    main()
