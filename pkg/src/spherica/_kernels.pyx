# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernels.  Same signatures as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()


cdef inline int64_t _inv(int64_t a, int64_t p):
    # extended Euclid; a is nonzero mod p
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(a, long long p):
    cdef cnp.ndarray[int64_t, ndim=2] m = np.array(a, dtype=np.int64, copy=True) % p
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t inv, f, tmp
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        inv = _inv(m[r, c], p)
        for j in range(c, cols):
            m[r, j] = (m[r, j] * inv) % p
        for i in range(r + 1, rows):
            f = m[i, c]
            if f != 0:
                for j in range(c, cols):
                    if m[r, j] != 0:
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
                        if m[i, j] < 0:
                            m[i, j] += p
        r += 1
    return int(r)


def eliminate(cnp.ndarray[int64_t, ndim=2] d,
              cnp.ndarray[int64_t, ndim=1] node,
              cnp.ndarray[int64_t, ndim=1] pos,
              cnp.ndarray[uint8_t, ndim=2] mask,
              long long p):
    """Cancel invertible degree-0 entries of ``d`` (target x source) in place.

    Returns a uint8 array marking the surviving generators.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef cnp.ndarray[uint8_t, ndim=1] alive = np.ones(n, dtype=np.uint8)
    cdef Py_ssize_t g, h, x, y
    cdef int64_t cinv, a, b, v
    cdef bint found
    while True:
        found = False
        # rescan from 0: updates can create new pivots in earlier columns
        for g in range(n):
            if not alive[g]:
                continue
            for h in range(n):
                if (alive[h] and d[h, g] != 0 and node[h] == node[g]
                        and pos[h] == pos[g] + 1):
                    found = True
                    break
            if found:
                break
        if not found:
            break
        cinv = _inv(d[h, g], p)
        for y in range(n):
            if not alive[y] or y == g or y == h:
                continue
            a = d[y, g]
            if a == 0:
                continue
            a = (a * cinv) % p
            for x in range(n):
                if not alive[x] or x == g or x == h:
                    continue
                b = d[h, x]
                if b == 0 or not mask[y, x]:
                    continue
                v = (d[y, x] - a * b) % p
                if v < 0:
                    v += p
                d[y, x] = v
        alive[g] = 0
        alive[h] = 0
        for x in range(n):
            d[g, x] = 0
            d[h, x] = 0
            d[x, g] = 0
            d[x, h] = 0
    return alive
