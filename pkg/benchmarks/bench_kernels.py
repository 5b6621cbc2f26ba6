"""Compare the compiled kernels against the pure-Python fallback.

Runs the two hot paths — affine canonicalization of color sets and small
integer determinants — through both backends and prints timings.  Invoke as

    python3 benchmarks/bench_kernels.py
"""

import random
import time
from itertools import combinations

from knotcol._kernels import _fallback

try:
    from knotcol._kernels import _speedups
except ImportError:
    _speedups = None


def bench_canonical(mod):
    p = 31
    start = time.perf_counter()
    count = 0
    for s in combinations(range(p), 4):
        mod.canonical_affine_min(s, p)
        count += 1
    return time.perf_counter() - start, count


def bench_det(mod):
    rng = random.Random(1)
    cases = []
    for _ in range(20_000):
        k = rng.randint(1, 8)
        cases.append(([rng.randint(-8, 8) for _ in range(k * k)], k))
    start = time.perf_counter()
    for flat, k in cases:
        mod.det_bareiss_small(flat, k)
    return time.perf_counter() - start, len(cases)


def main():
    backends = [("python", _fallback)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled kernels not built; benchmarking fallback only")

    for title, bench in (("canonicalization (C(31,4) sets)", bench_canonical),
                         ("determinants (20000 matrices, order 1-8)", bench_det)):
        print(f"\n{title}")
        base = None
        for name, mod in backends:
            elapsed, count = bench(mod)
            rate = count / elapsed
            note = ""
            if base is None:
                base = elapsed
            else:
                note = f"  ({base / elapsed:.1f}x speedup)"
            print(f"  {name:9s} {elapsed:8.3f} s  ({rate:,.0f}/s){note}")


if __name__ == "__main__":
    main()
