"""Time the brute-force lattice kernel: numba (Kahan loop) against blocked numpy.

    python benchmarks/bench_lattice.py [--cutoff 4000] [--repeat 5]
"""
import argparse
import time

import numpy as np

from orbicasimir import _accel
from orbicasimir.oracle.lattice import lattice_rows

CASES = [
    # (gamma, alpha, beta, s, log_power)
    (1.0, 1.0, 1.0, 3.0, 0),
    (1.0, 2.0, 3.0, 3.0, 0),
    (6.0, 2.0, 5.0, 4.0, 1),
    (1.0, 2.0, 3.0, 2.5, 0),  # non-integer exponent: libm pow in both backends
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cutoff", type=int, default=4000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not _accel.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"cutoff={args.cutoff}  ({(args.cutoff + 1) ** 2:,} lattice points per case), best of {args.repeat}")
    print(f"{'case':<26}{'numba s':>10}{'numpy s':>10}{'speedup':>9}{'max rel diff':>15}")
    for g, a, b, s, ell in CASES:
        call = lambda backend: lattice_rows(g, a, b, s, ell, args.cutoff, backend=backend)
        call("numba")  # compile outside the timing
        t_numba = best_of(lambda: call("numba"), args.repeat)
        t_numpy = best_of(lambda: call("numpy"), args.repeat)
        rows_a, rows_b = call("numba")[0], call("numpy")[0]
        diff = np.max(np.abs(rows_a - rows_b) / np.abs(rows_b))
        label = f"g={g:g} w=({a:g},{b:g}) s={s:g} l={ell}"
        print(f"{label:<26}{t_numba:>10.4f}{t_numpy:>10.4f}{t_numpy / t_numba:>8.1f}x{diff:>15.2e}")


if __name__ == "__main__":
    main()
