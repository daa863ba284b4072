#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the pure numpy fallback.

Usage: python3 benchmarks/bench_jacobi.py [--sizes 32,64,128]
"""

import argparse
import time

from specdist import FamilySpec, adjacency_matrix, build_family
from specdist.eigensolver import available_backends, symmetric_eigenvalues


def time_backend(m, backend, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        symmetric_eigenvalues(m, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="32,64,128")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'n':>6}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in sizes:
        m = adjacency_matrix(build_family(FamilySpec("w", n)))
        times = [time_backend(m, b) for b in backends]
        row = f"{n:>6}" + "".join(f"{t:>13.4f}s" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
