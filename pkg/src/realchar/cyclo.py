"""Exact arithmetic in the cyclotomic integers Z[zeta_e].

Values are integer coefficient vectors of length e over the full set of e-th
roots of unity (the redundant presentation Z[x]/(x^e - 1)); a vector
represents zero exactly when the corresponding polynomial is divisible by the
e-th cyclotomic polynomial, which is checked with exact integer division.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

# product coefficients bounded by e * max|u| * max|v|; stay well under int64
_NP_LIMIT = 2**62


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    f = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            f = _exact_div(f, cyclotomic_polynomial(d))
    return tuple(f)


def _exact_div(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """f // g over Z for monic g with exact division."""
    rem = list(f)
    dg = len(g) - 1
    quo = [0] * (len(rem) - dg)
    for shift in range(len(quo) - 1, -1, -1):
        c = rem[shift + dg]
        quo[shift] = c
        if c:
            for i, y in enumerate(g):
                rem[shift + i] -= c * y
    if any(rem):
        raise ArithmeticError("division was not exact")
    return quo


def embed(n: int, mult: Sequence[int], e: int) -> np.ndarray:
    """Lift a value over zeta_n into the length-e vector over zeta_e."""
    if e % n != 0:
        raise ArithmeticError(f"order {n} does not divide conductor {e}")
    out = np.zeros(e, dtype=np.int64)
    step = e // n
    for j, m in enumerate(mult):
        out[j * step] += m
    return out


def conj(u: np.ndarray) -> np.ndarray:
    """Complex conjugation: zeta^j -> zeta^-j."""
    out = np.empty_like(u)
    out[0] = u[0]
    out[1:] = u[:0:-1]
    return out


def ring_mul(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Cyclic convolution of length-e vectors."""
    e = len(u)
    mu = int(np.abs(u).max()) if e else 0
    mv = int(np.abs(v).max()) if e else 0
    if mu * mv * e < _NP_LIMIT:
        full = np.convolve(u, v)
        out = full[:e].copy()
        out[: len(full) - e] += full[e:]
        return out
    out_py = [0] * e
    for i, x in enumerate(u.tolist()):
        if x:
            for j, y in enumerate(v.tolist()):
                out_py[(i + j) % e] += x * y
    return np.array(out_py, dtype=object)


def is_zero(u: np.ndarray | Sequence[int], e: int) -> bool:
    """Whether the vector represents 0 in Z[zeta_e]."""
    rem = [int(x) for x in u]
    if not any(rem):
        return True
    phi = cyclotomic_polynomial(e)
    dg = len(phi) - 1
    # exact remainder mod the monic cyclotomic polynomial, in Python ints
    for shift in range(len(rem) - dg, 0, -1):
        c = rem[shift + dg - 1]
        if c:
            for i, y in enumerate(phi):
                rem[shift - 1 + i] -= c * y
    return not any(rem[:dg])
