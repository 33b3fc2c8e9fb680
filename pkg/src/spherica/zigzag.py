"""Zigzag algebras and twisted complexes of shifted projectives.

The zigzag algebra of a diagram has basis

* ``e_i`` (degree 0) for every node,
* ``a_{j<-i}`` (degree 1), the arrow from ``i`` to ``j``, for adjacent nodes,
* ``X_i`` (degree 2) for every node.

Products are written right to left: ``x * y`` means "first ``y``, then
``x``".  So ``a_{i<-j} * a_{j<-i} = X_i``; every other product of two arrows
vanishes, as does any product with ``X`` other than by an idempotent.

Between two nodes there is at most one basis path in each degree.  A map
between twisted complexes is therefore a scalar matrix (rows = target
generators, columns = source generators); entry ``(h, g)`` of a map of
degree ``d`` is the coefficient of the unique path ``node(g) -> node(h)``
of degree ``d + pos(g) - pos(h)``.  Composition is the ordinary matrix
product followed by zeroing the entries whose required path does not exist.

A generator ``(i, n)`` stands for ``P_i`` placed at position ``n``; shifting
by ``[k]`` lowers every position by ``k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .dynkin import DynkinDiagram
from .linalg import in_span, is_prime, nullspace, rank_mod_p

DEFAULT_FIELD = 32003

Gen = tuple[int, int]


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class ZigzagAlgebra:
    diagram: DynkinDiagram
    p: int = DEFAULT_FIELD

    def __post_init__(self):
        if not is_prime(self.p):
            raise ComplexError(f"field characteristic {self.p} is not prime")

    @cached_property
    def basis(self) -> tuple[tuple, ...]:
        d = self.diagram
        out: list[tuple] = [("e", i) for i in d.nodes]
        out += [("a", j, i) for i in d.nodes for j in d.neighbours(i)]
        out += [("X", i) for i in d.nodes]
        return tuple(out)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def adjacency(self) -> np.ndarray:
        n = self.diagram.rank
        a = np.zeros((n + 1, n + 1), dtype=bool)
        for i, j in self.diagram.edges:
            a[i, j] = a[j, i] = True
        return a

    def path(self, src: int, tgt: int, deg: int) -> tuple | None:
        """The basis path ``src -> tgt`` of degree ``deg``, if any."""
        if deg == 0 and src == tgt:
            return ("e", src)
        if deg == 1 and self.diagram.adjacent(src, tgt):
            return ("a", tgt, src)
        if deg == 2 and src == tgt:
            return ("X", src)
        return None

    @staticmethod
    def endpoints(x: tuple) -> tuple[int, int, int]:
        """``(source, target, degree)`` of a basis element."""
        if x[0] == "e":
            return x[1], x[1], 0
        if x[0] == "a":
            return x[2], x[1], 1
        return x[1], x[1], 2

    def multiply(self, x: tuple, y: tuple) -> tuple | None:
        """Product ``x * y`` (``y`` first); ``None`` for zero."""
        ys, yt, yd = self.endpoints(y)
        xs, xt, xd = self.endpoints(x)
        if xs != yt:
            return None
        return self.path(ys, xt, xd + yd)

    def mask(self, src_nodes, src_pos, tgt_nodes, tgt_pos, degree: int) -> np.ndarray:
        """Boolean matrix: does the path required by a degree-``degree`` map exist."""
        sn = np.asarray(src_nodes, dtype=np.int64)
        tn = np.asarray(tgt_nodes, dtype=np.int64)
        deg = degree + np.asarray(src_pos, dtype=np.int64)[None, :] - np.asarray(tgt_pos, dtype=np.int64)[:, None]
        same = tn[:, None] == sn[None, :]
        adj = self.adjacency[np.ix_(tn, sn)]
        return ((deg == 0) | (deg == 2)) & same | (deg == 1) & adj


def algebra(d: DynkinDiagram, p: int = DEFAULT_FIELD) -> ZigzagAlgebra:
    return ZigzagAlgebra(d, p)


def path_label(x: tuple) -> str:
    if x[0] == "e":
        return f"e{x[1]}"
    if x[0] == "a":
        return f"a{x[2]}>{x[1]}"
    return f"X{x[1]}"


def parse_path(text: str) -> tuple:
    if text[0] == "e":
        return ("e", int(text[1:]))
    if text[0] == "X":
        return ("X", int(text[1:]))
    if text[0] == "a":
        src, tgt = text[1:].split(">")
        return ("a", int(tgt), int(src))
    raise ComplexError(f"bad path expression {text!r}")


class TwistedComplex:
    """Finite complex of shifted projectives with a square-zero differential."""

    def __init__(self, alg: ZigzagAlgebra, gens, diff=None, check: bool = True):
        self.algebra = alg
        self.gens: tuple[Gen, ...] = tuple((int(i), int(n)) for i, n in gens)
        n = len(self.gens)
        if diff is None:
            diff = np.zeros((n, n), dtype=np.int64)
        self.diff = np.asarray(diff, dtype=np.int64) % alg.p
        if self.diff.shape != (n, n):
            raise ComplexError(f"differential shape {self.diff.shape} does not match {n} generators")
        self.diff.setflags(write=False)
        for i, _ in self.gens:
            alg.diagram.check_node(i)
        if check:
            self.validate()

    @cached_property
    def nodes(self) -> np.ndarray:
        return np.array([g[0] for g in self.gens], dtype=np.int64)

    @cached_property
    def positions(self) -> np.ndarray:
        return np.array([g[1] for g in self.gens], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        return f"TwistedComplex({self.algebra.diagram.name}, {len(self)} gens, census={dict(census(self))})"

    def self_mask(self, degree: int = 1) -> np.ndarray:
        return self.algebra.mask(self.nodes, self.positions, self.nodes, self.positions, degree)

    def validate(self) -> None:
        nz = self.diff != 0
        if np.any(nz & ~self.self_mask(1)):
            raise ComplexError("differential entry violates the degree rule")
        sq = compose_matrices(self, self.diff, 1, self, self.diff, 1, self)
        if np.any(sq):
            raise ComplexError("differential does not square to zero")


def compose_matrices(src: TwistedComplex, f: np.ndarray, fdeg: int,
                     mid: TwistedComplex, g: np.ndarray, gdeg: int,
                     tgt: TwistedComplex) -> np.ndarray:
    """Matrix of ``g o f`` for ``f: src -> mid`` and ``g: mid -> tgt``."""
    p = src.algebra.p
    prod = (np.asarray(g, dtype=np.int64) @ np.asarray(f, dtype=np.int64)) % p
    m = src.algebra.mask(src.nodes, src.positions, tgt.nodes, tgt.positions, fdeg + gdeg)
    return np.where(m, prod, 0)


@dataclass(frozen=True, eq=False)
class Morphism:
    """A map of the given degree between twisted complexes."""

    source: TwistedComplex
    target: TwistedComplex
    degree: int
    matrix: np.ndarray = field(repr=False)

    def differential(self) -> np.ndarray:
        s, t, d = self.source, self.target, self.degree
        a = compose_matrices(s, self.matrix, d, t, t.diff, 1, t)
        b = compose_matrices(s, s.diff, 1, s, self.matrix, d, t)
        return (a - (-1) ** d * b) % s.algebra.p

    def is_cocycle(self) -> bool:
        return not np.any(self.differential())

    def is_zero_class(self) -> bool:
        """Whether this cocycle is null-homotopic."""
        v = hom_complex(self.source, self.target)
        vec = v.vector(self)
        dprev = v.map(self.degree - 1)
        return in_span(dprev.T, vec, self.source.algebra.p)


def _same_algebra(*cs: TwistedComplex) -> ZigzagAlgebra:
    alg = cs[0].algebra
    for c in cs[1:]:
        if c.algebra != alg:
            raise ComplexError("complexes live over different algebras")
    return alg


def spherical_object(alg: ZigzagAlgebra, i: int) -> TwistedComplex:
    return TwistedComplex(alg, [(i, 0)])


def sphere_sum(alg: ZigzagAlgebra) -> TwistedComplex:
    """The direct sum of all ``S_i``."""
    return TwistedComplex(alg, [(i, 0) for i in alg.diagram.nodes])


def zero_object(alg: ZigzagAlgebra) -> TwistedComplex:
    return TwistedComplex(alg, [])


def shift(c: TwistedComplex, k: int) -> TwistedComplex:
    """``C[k]``: every position drops by ``k``; the differential is unchanged."""
    return TwistedComplex(c.algebra, [(i, n - k) for i, n in c.gens], c.diff, check=False)


def direct_sum(*cs: TwistedComplex) -> TwistedComplex:
    alg = _same_algebra(*cs)
    gens = [g for c in cs for g in c.gens]
    n = len(gens)
    diff = np.zeros((n, n), dtype=np.int64)
    off = 0
    for c in cs:
        k = len(c)
        diff[off:off + k, off:off + k] = c.diff
        off += k
    return TwistedComplex(alg, gens, diff, check=False)


def cone(f: Morphism) -> TwistedComplex:
    """Cone of a closed degree-0 map ``A -> B``: ``A[1] (+) B``."""
    if f.degree != 0:
        raise ComplexError("cone needs a degree-0 map")
    a, b = f.source, f.target
    alg = _same_algebra(a, b)
    na, nb = len(a), len(b)
    diff = np.zeros((na + nb, na + nb), dtype=np.int64)
    diff[:na, :na] = -a.diff
    diff[na:, :na] = f.matrix
    diff[na:, na:] = b.diff
    gens = [(i, n - 1) for i, n in a.gens] + list(b.gens)
    return TwistedComplex(alg, gens, diff % alg.p)


@dataclass
class VectorComplex:
    """Finite complex of vector spaces over ``F_p`` with a degree +1 differential.

    ``maps[d]`` is the matrix ``V^d -> V^{d+1}`` (shape ``dims[d+1] x dims[d]``).
    """

    p: int
    basis: dict[int, list]
    maps: dict[int, np.ndarray]

    @property
    def dims(self) -> dict[int, int]:
        return {d: len(b) for d, b in sorted(self.basis.items()) if b}

    def map(self, d: int) -> np.ndarray:
        if d in self.maps:
            return self.maps[d]
        return np.zeros((len(self.basis.get(d + 1, [])), len(self.basis.get(d, []))), dtype=np.int64)

    def vector(self, f: Morphism) -> np.ndarray:
        labels = self.basis.get(f.degree, [])
        return np.array([f.matrix[h, g] for g, h in labels], dtype=np.int64) % self.p

    def squares_to_zero(self) -> bool:
        for d in self.basis:
            if np.any((self.map(d + 1) @ self.map(d)) % self.p):
                return False
        return True


def hom_complex(c: TwistedComplex, d: TwistedComplex) -> VectorComplex:
    """``RHom(C, D)``: basis of degree ``k`` is all ``(g, h)`` with a path of
    degree ``k + pos(g) - pos(h)`` from ``node(g)`` to ``node(h)``.

    The differential is ``f -> delta_D f - (-1)^k f delta_C``.
    """
    alg = _same_algebra(c, d)
    p = alg.p
    basis: dict[int, list[tuple[int, int]]] = {}
    for gi, (gn, gp) in enumerate(c.gens):
        for hi, (hn, hp) in enumerate(d.gens):
            for deg in (0, 1, 2):
                if alg.path(gn, hn, deg) is not None:
                    basis.setdefault(deg - gp + hp, []).append((gi, hi))
    index = {k: {lab: n for n, lab in enumerate(b)} for k, b in basis.items()}
    maps = {}
    dd = d.diff
    dc = c.diff
    for k, labels in basis.items():
        tgt = index.get(k + 1)
        if not tgt:
            continue
        m = np.zeros((len(tgt), len(labels)), dtype=np.int64)
        sign = -((-1) ** k)
        for col, (g, h) in enumerate(labels):
            for h2 in np.flatnonzero(dd[:, h]):
                row = tgt.get((g, int(h2)))
                if row is not None:
                    m[row, col] += dd[h2, h]
            for g2 in np.flatnonzero(dc[g, :]):
                row = tgt.get((int(g2), h))
                if row is not None:
                    m[row, col] += sign * dc[g, g2]
        maps[k] = m % p
    return VectorComplex(p, basis, maps)


def cohomology_dims(v: VectorComplex) -> dict[int, int]:
    out = {}
    for k, labels in sorted(v.basis.items()):
        n = len(labels)
        if not n:
            continue
        r_out = rank_mod_p(v.map(k), v.p) if v.map(k).size else 0
        prev = v.map(k - 1)
        r_in = rank_mod_p(prev, v.p) if prev.size else 0
        h = n - r_out - r_in
        if h:
            out[k] = h
    return out


def hom_dims(c: TwistedComplex, d: TwistedComplex) -> dict[int, int]:
    return cohomology_dims(hom_complex(c, d))


def cohomology_basis(c: TwistedComplex, d: TwistedComplex, degree: int) -> list[Morphism]:
    """Cocycles whose classes form a basis of ``[C, D]_degree``."""
    v = hom_complex(c, d)
    p = v.p
    labels = v.basis.get(degree, [])
    if not labels:
        return []
    ker = nullspace(v.map(degree), p) if v.map(degree).size else np.eye(len(labels), dtype=np.int64)
    span = v.map(degree - 1).T % p
    span = span.reshape(-1, len(labels))
    out = []
    for vec in ker:
        if not in_span(span, vec, p):
            span = np.vstack([span, vec])
            out.append(_morphism_from_vector(c, d, degree, labels, vec))
    return out


def _morphism_from_vector(c, d, degree, labels, vec) -> Morphism:
    m = np.zeros((len(d), len(c)), dtype=np.int64)
    for (g, h), x in zip(labels, vec):
        m[h, g] = x
    return Morphism(c, d, degree, m)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``g o f`` for cocycles ``f: X -> Y`` and ``g: Y -> Z``."""
    y1, y2 = f.target, g.source
    if y1 is not y2 and (y1.gens != y2.gens or np.any(y1.diff != y2.diff)):
        raise ComplexError("composition of non-composable maps")
    if not (f.is_cocycle() and g.is_cocycle()):
        raise ComplexError("compose expects cocycles")
    x, y, z = f.source, f.target, g.target
    m = compose_matrices(x, f.matrix, f.degree, y, g.matrix, g.degree, z)
    return Morphism(x, z, f.degree + g.degree, m)


def identity_morphism(c: TwistedComplex) -> Morphism:
    return Morphism(c, c, 0, np.eye(len(c), dtype=np.int64))


def gauss_eliminate(c: TwistedComplex) -> TwistedComplex:
    """Homotopy-equivalent minimal model: cancel every invertible idempotent entry.

    For an entry ``delta[h, g] = u e_i`` with ``u != 0`` both generators are
    dropped and ``delta[y, x]`` becomes ``delta[y, x] - delta[y, g] u^-1 delta[h, x]``.
    """
    if len(c) == 0:
        return c
    d = np.array(c.diff, dtype=np.int64, copy=True)
    mask = c.self_mask(1).astype(np.uint8)
    alive = kernels.eliminate(d, c.nodes.copy(), c.positions.copy(), mask, c.algebra.p)
    keep = np.flatnonzero(alive)
    gens = [c.gens[k] for k in keep]
    return TwistedComplex(c.algebra, gens, d[np.ix_(keep, keep)])


def is_minimal(c: TwistedComplex) -> bool:
    nodes, pos = c.nodes, c.positions
    deg0 = (nodes[:, None] == nodes[None, :]) & (pos[:, None] == pos[None, :] + 1)
    return not np.any(deg0 & (c.diff != 0))


def census(c: TwistedComplex) -> Counter:
    return Counter(c.gens)


def dump(c: TwistedComplex) -> str:
    """Text dump: ``node position`` per generator, then ``g h path coeff`` per entry."""
    lines = [f"# {c.algebra.diagram.name} p={c.algebra.p}"]
    lines += [f"{i} {n}" for i, n in c.gens]
    lines.append("---")
    for h, g in zip(*np.nonzero(c.diff)):
        (gn, gp), (hn, hp) = c.gens[g], c.gens[h]
        x = c.algebra.path(gn, hn, 1 + gp - hp)
        lines.append(f"{g} {h} {path_label(x)} {int(c.diff[h, g])}")
    return "\n".join(lines) + "\n"


def load(alg: ZigzagAlgebra, text: str) -> TwistedComplex:
    gens: list[Gen] = []
    entries = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line == "---":
            continue
        tok = line.split()
        if len(tok) == 2:
            gens.append((int(tok[0]), int(tok[1])))
        elif len(tok) == 4:
            entries.append((int(tok[0]), int(tok[1]), parse_path(tok[2]), int(tok[3])))
        else:
            raise ComplexError(f"cannot parse dump line {line!r}")
    n = len(gens)
    diff = np.zeros((n, n), dtype=np.int64)
    for g, h, x, coeff in entries:
        (gn, gp), (hn, hp) = gens[g], gens[h]
        if alg.path(gn, hn, 1 + gp - hp) != x:
            raise ComplexError(f"path {path_label(x)} does not fit generators {g} -> {h}")
        diff[h, g] = coeff
    return TwistedComplex(alg, gens, diff)
