"""Spherical twists, their inverses, and probe tables ``dim [S_i, C]_d``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .garside import BraidWord
from .zigzag import (
    Morphism,
    TwistedComplex,
    cohomology_dims,
    cone,
    gauss_eliminate,
    hom_complex,
    shift,
    spherical_object,
)


def twist(i: int, c: TwistedComplex, minimal: bool = True) -> TwistedComplex:
    """``t_i C``: cone of evaluation ``RHom(S_i, C) (x) S_i -> C``.

    With ``minimal`` the cone is passed through Gaussian elimination.
    """
    alg = c.algebra
    s = spherical_object(alg, i)
    h = hom_complex(s, c)
    degrees = sorted(k for k, b in h.basis.items() if b)
    # one generator (i, k) per basis vector of RHom^k
    offsets, gens = {}, []
    for k in degrees:
        offsets[k] = len(gens)
        gens.extend((i, k) for _ in h.basis[k])
    n = len(gens)
    dt = np.zeros((n, n), dtype=np.int64)
    ev = np.zeros((len(c), n), dtype=np.int64)
    for k in degrees:
        o = offsets[k]
        if k + 1 in offsets and k in h.maps:
            m = h.maps[k]
            o2 = offsets[k + 1]
            dt[o2:o2 + m.shape[0], o:o + m.shape[1]] = m
        for col, (_, target) in enumerate(h.basis[k]):
            ev[target, o + col] = 1
    t = TwistedComplex(alg, gens, dt)
    out = cone(Morphism(t, c, 0, ev))
    return gauss_eliminate(out) if minimal else out


def untwist(i: int, c: TwistedComplex, minimal: bool = True) -> TwistedComplex:
    """``t_i^-1 C``: cone of coevaluation ``C -> RHom(C, S_i)^v (x) S_i``, shifted by [-1]."""
    alg = c.algebra
    p = alg.p
    s = spherical_object(alg, i)
    h = hom_complex(c, s)
    degrees = sorted(k for k, b in h.basis.items() if b)
    # a basis vector of RHom^k(C, S_i) gives a dual generator at position -k
    offsets, gens = {}, []
    for k in degrees:
        offsets[k] = len(gens)
        gens.extend((i, -k) for _ in h.basis[k])
    n = len(gens)
    du = np.zeros((n, n), dtype=np.int64)
    coev = np.zeros((n, len(c)), dtype=np.int64)
    for k in degrees:
        o = offsets[k]
        if k + 1 in offsets and k in h.maps:
            m = h.maps[k]
            o2 = offsets[k + 1]
            # transpose of the hom differential, signed so coev is closed
            du[o:o + m.shape[1], o2:o2 + m.shape[0]] = (-((-1) ** k) * m.T) % p
        for row, (source, _) in enumerate(h.basis[k]):
            coev[o + row, source] = 1
    u = TwistedComplex(alg, gens, du)
    out = shift(cone(Morphism(c, u, 0, coev)), -1)
    return gauss_eliminate(out) if minimal else out


def twist_word(word: BraidWord, c: TwistedComplex) -> TwistedComplex:
    """Apply ``t_word``; the rightmost letter acts first."""
    for node, sign in reversed(word.letters):
        c = twist(node, c) if sign == 1 else untwist(node, c)
    return c


@dataclass(frozen=True)
class ProbeTable:
    """``dims[i][d] = dim [S_i, C]_d`` (nonzero entries only)."""

    dims: dict[int, dict[int, int]]

    @cached_property
    def max_degree(self) -> int | None:
        degs = [d for row in self.dims.values() for d in row]
        return max(degs) if degs else None

    @cached_property
    def top_nodes(self) -> frozenset[int]:
        p = self.max_degree
        return frozenset(i for i, row in self.dims.items() if p is not None and row.get(p))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbeTable):
            return NotImplemented
        return self.dims == other.dims

    def __hash__(self) -> int:
        return hash(tuple(sorted((i, tuple(sorted(r.items()))) for i, r in self.dims.items())))

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, d, n) for i in sorted(self.dims) for d, n in sorted(self.dims[i].items())]

    def format(self, machine: bool = True) -> str:
        """Aligned table, then ``---`` and ``node degree dim`` rows."""
        degs = sorted({d for _, d, _ in self.rows()})
        width = max([len(str(n)) for *_, n in self.rows()] + [len(str(d)) for d in degs] + [1])
        head = "node | " + " ".join(str(d).rjust(width) for d in degs)
        lines = [head, "-" * len(head)]
        for i in sorted(self.dims):
            cells = " ".join(str(self.dims[i].get(d, 0)).rjust(width) for d in degs)
            lines.append(f"{str(i).rjust(4)} | {cells}")
        top = " ".join(map(str, sorted(self.top_nodes)))
        lines.append(f"max degree: {self.max_degree}  top nodes: {top}")
        if machine:
            lines.append("---")
            lines += [f"{i} {d} {n}" for i, d, n in self.rows()]
        return "\n".join(lines)


def probe(c: TwistedComplex) -> ProbeTable:
    alg = c.algebra
    return ProbeTable({
        i: cohomology_dims(hom_complex(spherical_object(alg, i), c))
        for i in alg.diagram.nodes
    })


def parse_probe_rows(text: str) -> ProbeTable:
    """Read back the machine rows that follow ``---`` in ``ProbeTable.format``."""
    _, _, tail = text.partition("\n---\n")
    dims: dict[int, dict[int, int]] = {}
    for line in tail.splitlines():
        if line.strip():
            i, d, n = map(int, line.split())
            dims.setdefault(i, {})[d] = n
    return ProbeTable(dims)
