"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths (group enumeration, conjugacy sweep, class-matrix
counting) plus the normal-closure machinery on a few corpus groups, and
prints per-operation speedups.

Usage: python benchmarks/bench_kernels.py [group names...]
"""

from __future__ import annotations

import sys
import time

from realchar import _kernels_py
from realchar.catalog import resolve

try:
    from realchar import _speedups
except ImportError:
    _speedups = None

DEFAULT_NAMES = ["A5", "SL2_5", "L2_8", "A5xQ8", "L2_17"]


def _bench(backend, spec, repeats=3):
    gens = [g.images for g in spec.generators]
    timings = {}

    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        rows = backend.bfs_closure(spec.degree, gens, 1_000_000)
        best = min(best, time.perf_counter() - start)
    timings["enumerate"] = best

    table = backend.PermTable(rows)
    gen_idx = [rows.index(tuple(g)) for g in gens]

    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        class_of, classes = table.conjugacy_classes(gen_idx)
        best = min(best, time.perf_counter() - start)
    timings["classes"] = best

    reps = [c[0] for c in classes]
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        table.class_matrices(class_of, reps)
        best = min(best, time.perf_counter() - start)
    timings["class_matrices"] = best

    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        table.normal_closure([reps[1]] if len(reps) > 1 else [0], gen_idx)
        best = min(best, time.perf_counter() - start)
    timings["normal_closure"] = best

    return len(rows), timings


def main(argv: list[str]) -> int:
    names = argv or DEFAULT_NAMES
    if _speedups is None:
        print("compiled backend not built; run `python setup.py build_ext --inplace`")
        return 1
    header = f"{'group':10s} {'|G|':>6s} {'operation':16s} {'python':>10s} {'c':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name in names:
        spec = resolve(name)
        order, py_times = _bench(_kernels_py, spec)
        _, c_times = _bench(_speedups, spec)
        for op in py_times:
            ratio = py_times[op] / c_times[op] if c_times[op] > 0 else float("inf")
            print(
                f"{name:10s} {order:6d} {op:16s} "
                f"{py_times[op] * 1e3:9.2f}m {c_times[op] * 1e3:9.2f}m {ratio:7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
