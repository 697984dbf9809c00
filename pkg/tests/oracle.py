"""Independent brute-force character data for cross-checking the library.

Everything here deliberately avoids the library's class/table machinery:
conjugacy classes come from full pairwise conjugation, and character values
come from spectral projections of the regular representation (a random
central element is diagonalized; its eigenspaces are the isotypic blocks).
Values are floating point with generous margins; they are used to confirm
integer data (degree multisets, realness, indicators), never copied into
the library.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

TOL = 1e-6


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[j] for j in b)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, img in enumerate(a):
        out[img] = i
    return tuple(out)


@dataclass
class OracleTable:
    order: int
    class_sizes: list[int]
    class_reps: list[int]
    class_of: list[int]
    degrees: list[int]
    values: np.ndarray  # rows: characters, columns: classes
    real_flags: list[bool]
    rational_flags: list[bool]
    indicators: list[int]

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))

    def real_degree_set(self) -> tuple[int, ...]:
        return tuple(sorted({d for d, r in zip(self.degrees, self.real_flags) if r}))


def brute_classes(elements: list[tuple[int, ...]]) -> tuple[list[int], list[list[int]]]:
    """Conjugacy classes by conjugating with every group element."""
    index = {e: i for i, e in enumerate(elements)}
    m = len(elements)
    inverses = [index[_inv(e)] for e in elements]
    class_of = [-1] * m
    classes = []
    for x in range(m):
        if class_of[x] >= 0:
            continue
        c = len(classes)
        members = set()
        ex = elements[x]
        for g in range(m):
            conj = _mul(_mul(elements[inverses[g]], ex), elements[g])
            members.add(index[conj])
        for y in members:
            class_of[y] = c
        classes.append(sorted(members))
    return class_of, classes


def character_table(elements: list[tuple[int, ...]], seed: int = 12345) -> OracleTable:
    order = len(elements)
    index = {e: i for i, e in enumerate(elements)}
    class_of, classes = brute_classes(elements)
    k = len(classes)
    reps = [cls[0] for cls in classes]
    sizes = [len(cls) for cls in classes]

    inverses = [index[_inv(e)] for e in elements]
    # product_class[a][b] = class of elements[a] * elements[b]^-1
    prod_class = np.empty((order, order), dtype=np.int32)
    for a in range(order):
        ea = elements[a]
        for b in range(order):
            prod_class[a, b] = class_of[index[_mul(ea, elements[inverses[b]])]]

    rng = np.random.default_rng(seed)
    coeff = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    z = coeff[prod_class]  # random central element of the group algebra
    t, q = scipy.linalg.schur(z, output="complex")
    eigs = np.diag(t)

    clusters: list[list[int]] = []
    centers: list[complex] = []
    for i, lam in enumerate(eigs):
        for ci, mu in enumerate(centers):
            if abs(lam - mu) < 1e-7 * max(1.0, abs(mu)):
                clusters[ci].append(i)
                break
        else:
            clusters.append([i])
            centers.append(lam)

    mul_idx = np.empty((k, order), dtype=np.int64)
    for c, rep in enumerate(reps):
        er = elements[rep]
        for b in range(order):
            mul_idx[c, b] = index[_mul(er, elements[b])]

    degrees = []
    rows = []
    for cluster in clusters:
        dim = len(cluster)
        d = round(dim**0.5)
        assert d * d == dim, f"isotypic block of dimension {dim} is not a square"
        block = q[:, cluster]
        proj = block @ block.conj().T
        chi = np.empty(k, dtype=np.complex128)
        for c in range(k):
            # the isotypic block carries d copies of the irreducible
            chi[c] = proj[np.arange(order), mul_idx[c]].sum() / d
        degrees.append(d)
        rows.append(chi)
    assert sum(d * d for d in degrees) == order

    values = np.array(rows)
    real_flags = [bool(np.abs(row.imag).max() < TOL) for row in values]
    rational_flags = [
        bool(np.abs(row - np.round(row.real)).max() < TOL) for row in values
    ]

    sq_class = np.zeros(k, dtype=np.int64)
    for g in range(order):
        sq_class[class_of[index[_mul(elements[g], elements[g])]]] += 1
    indicators = []
    for row in values:
        nu = (row * sq_class).sum() / order
        nearest = int(np.round(nu.real))
        assert abs(nu - nearest) < TOL and nearest in (-1, 0, 1)
        indicators.append(nearest)

    return OracleTable(
        order=order,
        class_sizes=sizes,
        class_reps=reps,
        class_of=class_of,
        degrees=degrees,
        values=values,
        real_flags=real_flags,
        rational_flags=rational_flags,
        indicators=indicators,
    )
