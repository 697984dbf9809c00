"""Backend parity: the compiled kernels must match the pure-Python reference
exactly, output for output."""

from __future__ import annotations

import pytest

from realchar import _kernels_py
from realchar.catalog import resolve

speedups = pytest.importorskip("realchar._speedups")

NAMES = ["S3", "Q8", "D8", "A5", "S5", "SL2_5", "L2_7"]


def _tables(name):
    spec = resolve(name)
    gens = [g.images for g in spec.generators]
    rows = _kernels_py.bfs_closure(spec.degree, gens, 100_000)
    rows_c = speedups.bfs_closure(spec.degree, gens, 100_000)
    assert rows == rows_c
    gen_idx = [rows.index(tuple(g)) for g in gens]
    return _kernels_py.PermTable(rows), speedups.PermTable(rows), gen_idx, len(rows)


@pytest.mark.parametrize("name", NAMES)
def test_enumeration_and_arithmetic_parity(name):
    tp, tc, gen_idx, m = _tables(name)
    assert tp.size() == tc.size() == m
    sample = range(0, m, max(1, m // 17))
    for a in sample:
        assert tp.inv(a) == tc.inv(a)
        assert tp.order_of(a) == tc.order_of(a)
        for b in sample:
            assert tp.mul(a, b) == tc.mul(a, b)
        for g in gen_idx:
            assert tp.conj(a, g) == tc.conj(a, g)


@pytest.mark.parametrize("name", NAMES)
def test_class_and_closure_parity(name):
    tp, tc, gen_idx, m = _tables(name)
    cop, clp = tp.conjugacy_classes(gen_idx)
    coc, clc = tc.conjugacy_classes(gen_idx)
    assert cop == coc
    assert clp == clc
    reps = [c[0] for c in clp]
    assert tp.class_matrices(cop, reps) == tc.class_matrices(coc, reps)
    assert tp.centralizer(gen_idx) == tc.centralizer(gen_idx)
    seeds = [[1], [1, 2], [m - 1], list(range(0, m, 7))]
    for seed in seeds:
        assert tp.closure(seed) == tc.closure(seed)
        assert tp.normal_closure(seed, gen_idx) == tc.normal_closure(seed, gen_idx)


def test_cap_parity():
    spec = resolve("A5")
    gens = [g.images for g in spec.generators]
    assert _kernels_py.bfs_closure(5, gens, 59) is None
    assert speedups.bfs_closure(5, gens, 59) is None
    assert len(speedups.bfs_closure(5, gens, 60)) == 60


def test_backend_names():
    assert _kernels_py.BACKEND == "python"
    assert speedups.BACKEND == "c"
