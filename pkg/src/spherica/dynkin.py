"""ADE Dynkin diagrams and their positive roots.

Node numbering follows Bourbaki:

* ``A_n``: the path ``1 - 2 - ... - n``.
* ``D_n``: the path ``1 - 2 - ... - (n-2)`` with ``n-1`` and ``n`` both
  attached to ``n-2``.  For ``D_4`` node 2 is the centre of the star.
* ``E_n`` (n = 6, 7, 8): the path ``1 - 3 - 4 - 5 - ... - n`` with node 2
  attached to node 4.

Roots are integer tuples of simple-root coefficients.  Everything here is
exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

Root = tuple[int, ...]

FAMILIES = ("A", "D", "E")


class DiagramError(ValueError):
    """Raised for an invalid family/rank combination or an unknown node."""


def _edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        if rank < 1:
            raise DiagramError(f"A_{rank}: rank must be >= 1")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise DiagramError(f"D_{rank}: rank must be >= 4")
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
        return edges
    if family == "E":
        if rank not in (6, 7, 8):
            raise DiagramError(f"E_{rank}: only E6, E7, E8 exist")
        edges = [(1, 3), (2, 4), (3, 4)]
        edges += [(i, i + 1) for i in range(4, rank)]
        return edges
    raise DiagramError(f"unknown family {family!r}; expected one of A, D, E")


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    edges: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def _adj(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges) | frozenset((j, i) for i, j in self.edges)

    def adjacent(self, i: int, j: int) -> bool:
        return (i, j) in self._adj

    def neighbours(self, i: int) -> list[int]:
        return [j for j in self.nodes if (i, j) in self._adj]

    def check_node(self, i: int) -> int:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise DiagramError(f"node {i!r} is not a node of {self.name}")
        return i

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(
            tuple(2 if i == j else (-1 if self.adjacent(i, j) else 0) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(sorted(_close_roots(self), key=lambda r: (sum(r), r)))

    def __str__(self) -> str:
        return self.name


def build(family: str, rank: int) -> DynkinDiagram:
    """Build the diagram of type ``family`` and ``rank``.

    >>> build("D", 4).neighbours(2)
    [1, 3, 4]
    """
    family = str(family).upper()
    rank = int(rank)
    edges = _edges(family, rank)
    return DynkinDiagram(family, rank, tuple(edges))


def parse_type(text: str) -> DynkinDiagram:
    """Parse names like ``"A2"``, ``"d4"`` or ``"E6"``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise DiagramError(f"cannot parse diagram type {text!r}")
    return build(text[0], int(text[1:]))


def cartan_pairing(d: DynkinDiagram, i: int, root: Root) -> int:
    """The pairing of ``root`` with the coroot of node ``i``."""
    d.check_node(i)
    a = d.cartan_matrix
    return sum(c * a[j][i - 1] for j, c in enumerate(root))


def reflect(d: DynkinDiagram, i: int, root: Root) -> Root:
    """Apply the simple reflection ``s_i`` to ``root``."""
    c = cartan_pairing(d, i, root)
    out = list(root)
    out[i - 1] -= c
    return tuple(out)


def simple_root(d: DynkinDiagram, i: int) -> Root:
    d.check_node(i)
    return tuple(1 if j == i else 0 for j in d.nodes)


def is_positive(root: Root) -> bool:
    return all(c >= 0 for c in root) and any(c > 0 for c in root)


def is_negative(root: Root) -> bool:
    return all(c <= 0 for c in root) and any(c < 0 for c in root)


def _close_roots(d: DynkinDiagram) -> set[Root]:
    found = {simple_root(d, i) for i in d.nodes}
    frontier = list(found)
    while frontier:
        new = []
        for r in frontier:
            for i in d.nodes:
                s = reflect(d, i, r)
                if is_positive(s) and s not in found:
                    found.add(s)
                    new.append(s)
                elif not is_positive(s) and not is_negative(s):
                    raise AssertionError(f"closure produced a mixed-sign vector {s}")
        frontier = new
    return found


def positive_roots(d: DynkinDiagram) -> tuple[Root, ...]:
    return d.positive_roots
