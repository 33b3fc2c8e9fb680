"""Pure numpy fallback for the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

import numpy as np


def rank_mod_p(a, p: int) -> int:
    m = np.array(a, dtype=np.int64, copy=True) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        below = np.flatnonzero(m[r + 1:, c]) + r + 1
        if below.size:
            m[below] = (m[below] - np.outer(m[below, c], m[r])) % p
        r += 1
    return r


def eliminate(d: np.ndarray, node: np.ndarray, pos: np.ndarray, mask: np.ndarray, p: int) -> np.ndarray:
    n = d.shape[0]
    alive = np.ones(n, dtype=np.uint8)
    deg0 = (node[:, None] == node[None, :]) & (pos[:, None] == pos[None, :] + 1)
    mask = mask.astype(bool)
    while True:
        cand = np.argwhere((d != 0) & deg0)
        if cand.size == 0:
            break
        # same pivot order as the compiled kernel: smallest source, then target
        h, g = cand[np.lexsort((cand[:, 0], cand[:, 1]))[0]]
        cinv = pow(int(d[h, g]), -1, p)
        col = d[:, g] * cinv % p
        row = d[h, :].copy()
        col[[g, h]] = 0
        row[[g, h]] = 0
        upd = np.outer(col, row) % p
        d -= np.where(mask, upd, 0)
        d %= p
        alive[g] = alive[h] = 0
        d[[g, h], :] = 0
        d[:, [g, h]] = 0
    return alive
