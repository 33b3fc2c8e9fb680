"""Brute-force references.  Nothing here calls into ``weyl`` or ``garside``
except to read the values being checked."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .dynkin import DynkinDiagram

WORD_CAP = 10
GROUP_CAP = 100_000


class OracleCapError(ValueError):
    pass


def _rewrites(adj: frozenset, word: tuple[int, ...]):
    n = len(word)
    for k in range(n - 1):
        i, j = word[k], word[k + 1]
        if i != j and (i, j) not in adj:
            yield word[:k] + (j, i) + word[k + 2:]
    for k in range(n - 2):
        i, j, l = word[k:k + 3]
        if i == l and (i, j) in adj:
            yield word[:k] + (j, i, j) + word[k + 3:]


@lru_cache(maxsize=200_000)
def _equivalence_class(adj: frozenset, word: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for x in _rewrites(adj, w):
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return frozenset(seen)


def _adjacency(d: DynkinDiagram) -> frozenset:
    return frozenset(d.edges) | frozenset((j, i) for i, j in d.edges)


def positive_class(d: DynkinDiagram, nodes, cap: int = WORD_CAP) -> frozenset[tuple[int, ...]]:
    word = tuple(nodes)
    if len(word) > cap:
        raise OracleCapError(f"word length {len(word)} exceeds oracle cap {cap}")
    return _equivalence_class(_adjacency(d), word)


def brute_equal_positive(a, b, cap: int = WORD_CAP) -> bool:
    """Decide equality in the braid monoid by exhaustive rewriting.

    ``a`` and ``b`` are positive ``BraidWord`` objects.
    """
    if not (a.is_positive and b.is_positive):
        raise ValueError("oracle handles positive words only")
    na, nb = tuple(a.nodes()), tuple(b.nodes())
    if max(len(na), len(nb)) > cap:
        raise OracleCapError(f"word length exceeds oracle cap {cap}")
    if len(na) != len(nb):
        return False
    return nb in positive_class(a.diagram, na, cap)


def _generator_matrices(d: DynkinDiagram) -> list[tuple[tuple[int, ...], ...]]:
    n = d.rank
    gens = []
    for i in range(n):
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                v = int(r == c)
                if r == i:
                    # s_i(alpha_c) = alpha_c - A[c][i] alpha_i
                    v -= 2 if c == i else (-1 if d.adjacent(i + 1, c + 1) else 0)
                row.append(v)
            rows.append(tuple(row))
        gens.append(tuple(rows))
    return gens


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n))


@dataclass
class CayleyReport:
    diagram: str
    order: int
    max_length: int
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return f"cayley {self.diagram}: {status}, {self.order} elements, max length {self.max_length}"


def cayley_check(d: DynkinDiagram, cap: int = GROUP_CAP) -> CayleyReport:
    """BFS the Cayley graph with raw generator products and compare with ``weyl``."""
    from . import weyl

    gens = _generator_matrices(d)
    ident = tuple(tuple(int(r == c) for c in range(d.rank)) for r in range(d.rank))
    dist = {ident: 0}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            x = _matmul(m, g)
            if x not in dist:
                dist[x] = dist[m] + 1
                if len(dist) > cap:
                    raise OracleCapError(f"|W({d.name})| exceeds cap {cap}")
                queue.append(x)
    problems = []
    for m, k in dist.items():
        w = weyl.WeylElement(d, m)
        if w.length != k:
            problems.append(f"length {w.length} != distance {k} for {weyl.reduced_word(w)}")
    top = max(dist.values())
    maximal = [m for m, k in dist.items() if k == top]
    if len(maximal) != 1:
        problems.append(f"{len(maximal)} elements of maximal length")
    elif weyl.WeylElement(d, maximal[0]) != weyl.longest_element(d):
        problems.append("maximal element differs from longest_element")
    return CayleyReport(d.name, len(dist), top, not problems, problems)


def is_simple(d: DynkinDiagram, nodes, cap: int = WORD_CAP) -> bool:
    """A positive word lies in the image of ``W`` iff no equivalent word has
    a repeated adjacent letter."""
    return not any(
        w[k] == w[k + 1] for w in positive_class(d, nodes, cap) for k in range(len(w) - 1)
    )


def brute_right_greedy(d: DynkinDiagram, nodes, cap: int = WORD_CAP) -> list[tuple[int, ...]]:
    """Right-greedy factorization by exhaustive search, leftmost factor first.

    Each factor is returned as one of its words; the rightmost factor is the
    longest simple suffix over all words equivalent to ``nodes``.
    """
    word = tuple(nodes)
    factors: list[tuple[int, ...]] = []
    while word:
        best = None
        for w in sorted(positive_class(d, word, cap)):
            for k in range(len(w), 0, -1):
                if best is not None and k <= len(best[1]):
                    break
                if is_simple(d, w[-k:], cap):
                    best = (w[:-k], w[-k:])
                    break
        prefix, suffix = best
        factors.append(suffix)
        word = prefix
    factors.reverse()
    return factors
