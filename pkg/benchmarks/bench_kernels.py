"""Time the numba and numpy pair classifiers on full Sym(n) batches.

    python benchmarks/bench_kernels.py [--degrees 4 5 6 7] [--repeat 3]

Each row classifies <x, y> for a handful of x against every y in Sym(n),
checks that both kernels agree, and prints milliseconds per x.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from bsgrowth.permgrp import _kernels
from bsgrowth.permgrp.oracle import sym_array


def best_of(fn, x_rows, ys, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for x in x_rows:
            fn(x, ys)
        best = min(best, time.perf_counter() - t0)
    return best / len(x_rows)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=[4, 5, 6, 7])
    ap.add_argument("--samples", type=int, default=8, help="x rows per degree")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    # compile once outside the timings
    _kernels.classify_pairs_jit(np.arange(3, dtype=np.int64), sym_array(3))

    print(f"{'n':>3} {'batch':>6} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n in args.degrees:
        ys = np.ascontiguousarray(sym_array(n))
        picks = rng.choice(len(ys), size=min(args.samples, len(ys)), replace=False)
        x_rows = [np.ascontiguousarray(ys[i]) for i in picks]
        for x in x_rows:
            if not np.array_equal(_kernels.classify_pairs_jit(x, ys), _kernels.classify_pairs_numpy(x, ys)):
                raise SystemExit(f"kernels disagree at n={n}, x={x.tolist()}")
        t_np = best_of(_kernels.classify_pairs_numpy, x_rows, ys, args.repeat)
        t_nb = best_of(_kernels.classify_pairs_jit, x_rows, ys, args.repeat)
        print(f"{n:>3} {len(ys):>6} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
