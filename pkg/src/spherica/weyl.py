"""Weyl groups of ADE diagrams as integer matrices on the root lattice.

An element ``w`` is stored as the rank x rank integer matrix whose column
``i`` is ``w(alpha_i)`` in simple-root coordinates.  Products compose as
matrices, so ``(u * v)(beta) = u(v(beta))``.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .dynkin import DynkinDiagram, DiagramError

ENUMERATION_CAP = 10**6


class WeylError(ValueError):
    pass


class WeylElement:
    """An element of the Weyl group of ``diagram``; immutable and hashable."""

    __slots__ = ("diagram", "matrix", "_key", "__dict__")

    def __init__(self, diagram: DynkinDiagram, matrix: np.ndarray):
        m = np.array(matrix, dtype=np.int64)
        m.setflags(write=False)
        self.diagram = diagram
        self.matrix = m
        self._key = m.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.diagram == other.diagram and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __repr__(self) -> str:
        word = " ".join(map(str, reduced_word(self))) or "id"
        return f"WeylElement({self.diagram.name}: {word})"

    @cached_property
    def length(self) -> int:
        roots = _root_array(self.diagram)
        images = roots @ self.matrix.T
        return int(np.count_nonzero((images <= 0).all(axis=1)))

    @cached_property
    def right_descents(self) -> frozenset[int]:
        neg = (self.matrix <= 0).all(axis=0)
        return frozenset(int(i) + 1 for i in np.flatnonzero(neg))

    @cached_property
    def left_descents(self) -> frozenset[int]:
        return inverse(self).right_descents

    def is_identity(self) -> bool:
        return self == identity(self.diagram)


@lru_cache(maxsize=None)
def _root_array(d: DynkinDiagram) -> np.ndarray:
    return np.array(d.positive_roots, dtype=np.int64)


@lru_cache(maxsize=None)
def _form_inverse(d: DynkinDiagram) -> tuple[np.ndarray, int]:
    """Integer adjugate and determinant of the Cartan matrix."""
    n = d.rank
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(d.cartan_matrix)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    det = _int_det(d.cartan_matrix)
    adj = np.array([[int(x * det) for x in row[n:]] for row in a], dtype=np.int64)
    return adj, det


def _int_det(m: tuple[tuple[int, ...], ...]) -> int:
    rows = [[Fraction(x) for x in r] for r in m]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return int(det)


def identity(d: DynkinDiagram) -> WeylElement:
    return WeylElement(d, np.eye(d.rank, dtype=np.int64))


def generator(d: DynkinDiagram, i: int) -> WeylElement:
    """The simple reflection ``s_i``."""
    try:
        d.check_node(i)
    except DiagramError as exc:
        raise WeylError(str(exc)) from None
    return _generators(d)[i - 1]


@lru_cache(maxsize=None)
def _generators(d: DynkinDiagram) -> tuple[WeylElement, ...]:
    a = d.cartan_matrix
    gens = []
    for i in d.nodes:
        m = np.eye(d.rank, dtype=np.int64)
        # s_i(alpha_j) = alpha_j - <alpha_j, alpha_i> alpha_i
        for j in d.nodes:
            m[i - 1, j - 1] -= a[j - 1][i - 1]
        gens.append(WeylElement(d, m))
    return tuple(gens)


def _check_same(u: WeylElement, v: WeylElement) -> None:
    if u.diagram != v.diagram:
        raise WeylError(f"diagram mismatch: {u.diagram.name} vs {v.diagram.name}")


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    _check_same(u, v)
    return WeylElement(u.diagram, u.matrix @ v.matrix)


def inverse(w: WeylElement) -> WeylElement:
    # w preserves the Cartan form B, so w^-1 = B^-1 w^T B
    adj, det = _form_inverse(w.diagram)
    b = np.array(w.diagram.cartan_matrix, dtype=np.int64)
    num = adj @ w.matrix.T @ b
    return WeylElement(w.diagram, num // det)


def from_word(d: DynkinDiagram, word) -> WeylElement:
    """Product ``s_{i1} s_{i2} ...`` of the given nodes."""
    m = np.eye(d.rank, dtype=np.int64)
    for i in word:
        m = m @ generator(d, i).matrix
    return WeylElement(d, m)


def length(w: WeylElement) -> int:
    return w.length


def right_descents(w: WeylElement) -> frozenset[int]:
    return w.right_descents


def left_descents(w: WeylElement) -> frozenset[int]:
    return w.left_descents


def strip_right(w: WeylElement, i: int) -> WeylElement:
    """Return ``w * s_i`` for a right descent ``i`` of ``w``."""
    if i not in w.right_descents:
        raise WeylError(f"{i} is not a right descent of {w!r}")
    return multiply(w, generator(w.diagram, i))


def strip_left(w: WeylElement, i: int) -> WeylElement:
    if i not in w.left_descents:
        raise WeylError(f"{i} is not a left descent of {w!r}")
    return multiply(generator(w.diagram, i), w)


def reduced_word(w: WeylElement) -> list[int]:
    """Reduced word for ``w``, stripping the smallest right descent each time."""
    out = []
    while True:
        desc = w.right_descents
        if not desc:
            break
        i = min(desc)
        out.append(i)
        w = multiply(w, generator(w.diagram, i))
    out.reverse()
    return out


def is_reduced_factorization(u: WeylElement, v: WeylElement) -> bool:
    return multiply(u, v).length == u.length + v.length


@lru_cache(maxsize=None)
def longest_element(d: DynkinDiagram) -> WeylElement:
    w = identity(d)
    while True:
        ascents = [i for i in d.nodes if i not in w.right_descents]
        if not ascents:
            return w
        w = multiply(w, generator(d, ascents[0]))


@lru_cache(maxsize=None)
def w0_automorphism(d: DynkinDiagram) -> dict[int, int]:
    """The permutation ``i -> i*`` with ``w0 s_i w0 = s_{i*}``."""
    w0 = longest_element(d)
    gens = {g: i for i, g in enumerate(_generators(d), start=1)}
    perm = {}
    for i in d.nodes:
        conj = w0 * generator(d, i) * w0
        perm[i] = gens[conj]
    return perm


def enumerate_group(d: DynkinDiagram, cap: int = ENUMERATION_CAP) -> list[WeylElement]:
    """All elements of ``W(d)`` by breadth-first closure, identity first."""
    start = identity(d)
    seen = {start}
    order = [start]
    queue = deque([start])
    gens = _generators(d)
    while queue:
        w = queue.popleft()
        for g in gens:
            x = multiply(w, g)
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise WeylError(f"|W({d.name})| exceeds enumeration cap {cap}")
                order.append(x)
                queue.append(x)
    return order

