"""Time the numba and numpy kernel backends on the same enumerations.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical arrays; the script checks that before
reporting timings.
"""

import argparse
import time

import numpy as np

from ghwcodes import _kernels
from ghwcodes.constructions import ConstructionSpec, construct
from ghwcodes.linalg import subspace_layout

CASES = [
    ("T42 q=2 k=5 u=(2,3)", ConstructionSpec.t42(2, 5, 2, 3), 2),
    ("T51 q=5 k=4 m=5", ConstructionSpec.t51(5, 4, 5), 2),
    ("T33 q=3 k=6 t=2 u=(2,4)", ConstructionSpec.t33(3, 6, 2, (2, 4)), 3),
    ("T35 q=4 k=5 t=1 u=(1,3)", ConstructionSpec.t35(4, 5, 1, (1, 3)), 2),
]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    _kernels.warmup()

    print(f"{'case':28} {'kernel':12} {'subspaces':>10} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    for name, spec, r in CASES:
        code = construct(spec)
        add, mul = code._tables()
        masks = code.support_masks
        lay = subspace_layout(code.q, code.k, r)
        dual = subspace_layout(code.q, code.k, code.k - r)
        weights = code.column_counts[None, :]
        jobs = [
            ("support", lay.count,
             lambda: _kernels.support_hist_numba(masks, lay, 0, lay.count, code.n),
             lambda: _kernels.support_hist_numpy(masks, lay, 0, lay.count, code.n)),
            ("span_sums", dual.count,
             lambda: _kernels.span_sums_numba(weights, add, mul, dual, 0, dual.count),
             lambda: _kernels.span_sums_numpy(weights, add, mul, dual, 0, dual.count)),
        ]
        for kernel, count, fast, slow in jobs:
            t_nb, a = best_of(fast, args.repeat)
            t_np, b = best_of(slow, args.repeat)
            assert np.array_equal(a, b), f"{name} {kernel}: backends disagree"
            print(f"{name:28} {kernel:12} {count:>10} {t_nb:>9.4f} {t_np:>9.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
