"""Braid words and right-greedy Garside normal forms.

A braid is written canonically as::

    lift(w_k) ... lift(w_1) * Delta^m

where each ``w_j`` is a Weyl element other than the identity and ``w0``,
and every adjacent pair ``(w_{j+1}, w_j)`` is normal, i.e. every right
descent of ``w_{j+1}`` is a left descent of ``w_j``.  The factor ``w_1``
is the longest right divisor lying in the image of the section ``W -> B+``.
This is the mirror image of the left-greedy form used in much of the
literature: reversing words swaps the two.

Text formats
------------
Words are whitespace-separated signed node indices: ``"1 2 -1"`` is
``s1 s2 s1^-1``.  Normal forms print as ``D^m | [i1 i2 ...] ... [j1 ...]``
with factors given by reduced words, leftmost factor first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import weyl
from .dynkin import DynkinDiagram
from .weyl import WeylElement


class WordError(ValueError):
    """Malformed braid word."""


Letter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    diagram: DynkinDiagram
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for node, sign in self.letters:
            if sign not in (1, -1):
                raise WordError(f"bad sign {sign!r}")
            if not isinstance(node, int) or not 1 <= node <= self.diagram.rank:
                raise WordError(f"node {node!r} not in {self.diagram.name}")

    @classmethod
    def positive(cls, d: DynkinDiagram, nodes: Iterable[int]) -> BraidWord:
        return cls(d, tuple((int(i), 1) for i in nodes))

    @property
    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.diagram != self.diagram:
            raise WordError("diagram mismatch")
        return BraidWord(self.diagram, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.diagram, tuple((i, -s) for i, s in reversed(self.letters)))

    def nodes(self) -> list[int]:
        return [i for i, _ in self.letters]

    def __str__(self) -> str:
        return " ".join(str(i * s) for i, s in self.letters)


def parse_word(d: DynkinDiagram, text: str) -> BraidWord:
    """Parse ``"1 2 -1"`` into a word; an empty string is the empty word."""
    letters = []
    for tok in text.replace(",", " ").split():
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise WordError(f"malformed letter {tok!r}")
        v = int(tok)
        if v == 0:
            raise WordError("0 is not a node")
        letters.append((abs(v), 1 if v > 0 else -1))
    return BraidWord(d, tuple(letters))


def free_reduce(word: BraidWord) -> BraidWord:
    out: list[Letter] = []
    for node, sign in word.letters:
        if out and out[-1] == (node, -sign):
            out.pop()
        else:
            out.append((node, sign))
    return BraidWord(word.diagram, tuple(out))


def lift(w: WeylElement) -> BraidWord:
    """Positive braid word of a reduced expression of ``w``."""
    return BraidWord.positive(w.diagram, weyl.reduced_word(w))


def project(word: BraidWord) -> WeylElement:
    return weyl.from_word(word.diagram, word.nodes())


def delta(d: DynkinDiagram) -> BraidWord:
    return lift(weyl.longest_element(d))


def tau(word: BraidWord) -> BraidWord:
    """Conjugate by Delta: relabel each letter by the w0 diagram automorphism."""
    perm = weyl.w0_automorphism(word.diagram)
    return BraidWord(word.diagram, tuple((perm[i], s) for i, s in word.letters))


def is_normal_pair(u: WeylElement, v: WeylElement) -> bool:
    return u.right_descents <= v.left_descents


def left_factor_generator(w: WeylElement, i: int) -> bool:
    return i in w.left_descents


def _fix_pair(u: WeylElement, v: WeylElement) -> tuple[WeylElement, WeylElement, bool]:
    changed = False
    while True:
        movable = sorted(u.right_descents - v.left_descents)
        if not movable:
            return u, v, changed
        t = movable[0]
        s = weyl.generator(u.diagram, t)
        u, v = u * s, s * v
        changed = True


def _normalize_factors(factors: list[WeylElement]) -> list[WeylElement]:
    """Bubble adjacent pairs into normal position until a fixpoint."""
    factors = [f for f in factors if f.length]
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            u, v, moved = _fix_pair(factors[j], factors[j + 1])
            if moved:
                factors[j], factors[j + 1] = u, v
                changed = True
        if changed:
            factors = [f for f in factors if f.length]
    return factors


def normalize_positive(word: BraidWord) -> list[WeylElement]:
    """Right-greedy factor sequence ``(w_k, ..., w_1)`` of a positive word.

    Factors equal to ``w0`` are kept; they collect at the right end.
    """
    if not word.is_positive:
        raise WordError("normalize_positive needs a positive word")
    d = word.diagram
    factors: list[WeylElement] = []
    # insert letters from the right so the tail is already normal
    for node in reversed(word.nodes()):
        factors = _normalize_factors([weyl.generator(d, node)] + factors)
    return factors


@dataclass(frozen=True)
class GarsideNormalForm:
    diagram: DynkinDiagram
    delta_power: int
    factors: tuple[WeylElement, ...]

    def __post_init__(self):
        w0 = weyl.longest_element(self.diagram)
        for f in self.factors:
            if f.length == 0 or f == w0:
                raise ValueError(f"invalid canonical factor {f!r}")
        for u, v in zip(self.factors, self.factors[1:]):
            if not is_normal_pair(u, v):
                raise ValueError(f"factor pair ({u!r}, {v!r}) is not normal")

    @property
    def k(self) -> int:
        return len(self.factors)

    def factor_words(self) -> list[list[int]]:
        return [weyl.reduced_word(f) for f in self.factors]

    def render(self) -> BraidWord:
        """A braid word representing this normal form."""
        d = self.diagram
        letters: list[Letter] = []
        for f in self.factors:
            letters.extend(lift(f).letters)
        dl = delta(d)
        if self.delta_power >= 0:
            letters.extend(dl.letters * self.delta_power)
        else:
            letters.extend(dl.inverse().letters * -self.delta_power)
        return BraidWord(d, tuple(letters))

    def __str__(self) -> str:
        parts = [f"D^{self.delta_power}", "|"]
        parts += ["[" + " ".join(map(str, w)) + "]" for w in self.factor_words()]
        return " ".join(parts)


def _from_factors(d: DynkinDiagram, factors: Sequence[WeylElement], m: int) -> GarsideNormalForm:
    w0 = weyl.longest_element(d)
    factors = list(factors)
    while factors and factors[-1] == w0:
        factors.pop()
        m += 1
    return GarsideNormalForm(d, m, tuple(factors))


def normalize(word: BraidWord) -> GarsideNormalForm:
    """Garside normal form of an arbitrary braid word.

    Each ``s_i^-1`` is rewritten as ``Delta^-1 lift(w0 s_i)``; the
    ``Delta^-1`` letters are then moved to the right end, relabelling every
    letter they pass by the w0 diagram automorphism.
    """
    d = word.diagram
    word = free_reduce(word)
    w0 = weyl.longest_element(d)
    perm = weyl.w0_automorphism(d)
    # Delta^-1 y = tau(y) Delta^-1, so a letter is relabelled once for every
    # Delta^-1 standing to its left (its own included)
    positive: list[int] = []
    inverses = 0
    for node, sign in word.letters:
        if sign == 1:
            chunk = [node]
        else:
            chunk = weyl.reduced_word(w0 * weyl.generator(d, node))
            inverses += 1
        if inverses % 2:
            chunk = [perm[i] for i in chunk]
        positive.extend(chunk)
    factors = normalize_positive(BraidWord.positive(d, positive))
    return _from_factors(d, factors, -inverses)


def equals(a: BraidWord, b: BraidWord) -> bool:
    if a.diagram != b.diagram:
        raise WordError("diagram mismatch")
    na, nb = normalize(a), normalize(b)
    return na.delta_power == nb.delta_power and na.factors == nb.factors
