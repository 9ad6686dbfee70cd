"""Compare the compiled kernel against the pure-Python fallback.

Times the raw generators (no wrapper overhead) on two workloads: the classic
two-term condition run far, and a zero-extended identity condition that
stays alive (N=42) run just as far.  The compiled row is skipped when the
extension is unavailable.

Usage: python benchmarks/bench_kernels.py [--terms 2000000] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qlab import _fallback


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=2_000_000,
                        help="terms for the two-term workload")
    parser.add_argument("--repeat", type=int, default=3, help="runs per cell (best kept)")
    args = parser.parse_args()

    try:
        from qlab import _kernel
    except ImportError:
        _kernel = None

    identity = list(range(1, 43))  # N=42 never ends, so the run fills max_terms
    workloads = [
        ("<1,1> x %d" % args.terms, [1, 1], False, args.terms),
        ("<0-bar;1..42> x %d" % args.terms, identity, True, args.terms),
    ]

    print(f"{'workload':<28} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, prefix, zero, max_terms in workloads:
        py = _time(lambda: _fallback.q_generate(prefix, zero, max_terms), args.repeat)
        if _kernel is not None:
            arr = np.asarray(prefix, dtype=np.int64)
            cy = _time(lambda: _kernel.q_generate(arr, zero, max_terms), args.repeat)
            print(f"{label:<28} {py:>9.3f}s {cy:>9.3f}s {py / cy:>7.1f}x")
        else:
            print(f"{label:<28} {py:>9.3f}s {'n/a':>10} {'n/a':>8}")


if __name__ == "__main__":
    main()
