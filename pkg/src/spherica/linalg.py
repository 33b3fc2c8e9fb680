"""Small dense linear algebra over a prime field."""

from __future__ import annotations

import numpy as np

from .kernels import rank_mod_p


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the right kernel of ``a``."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for row, pc in enumerate(pivots):
            out[k, pc] = (-r[row, f]) % p
    return out


def in_span(rows: np.ndarray, v: np.ndarray, p: int) -> bool:
    if not np.any(np.asarray(v) % p):
        return True
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, len(v))
    if rows.shape[0] == 0:
        return False
    return rank_mod_p(np.vstack([rows, v]), p) == rank_mod_p(rows, p)


__all__ = ["in_span", "is_prime", "nullspace", "rank_mod_p", "rref"]
