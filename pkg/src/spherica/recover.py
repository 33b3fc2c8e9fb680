"""Reconstruct a positive braid from the complex ``t_alpha(S_1 (+) ... (+) S_n)``.

Only probe tables are consulted.  The maximal probe degree ``p`` gives the
number of Garside factors ``k = p - 2``; the nodes reaching degree ``p`` are
the left descents of the leftmost factor.  Untwisting by such a node strips
it; once the maximal degree falls below ``k + 2`` the factor is complete.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import weyl
from .garside import BraidWord, GarsideNormalForm, _from_factors
from .twist import ProbeTable, probe, twist_word, untwist
from .zigzag import TwistedComplex, ZigzagAlgebra, sphere_sum


class RecoveryError(RuntimeError):
    """The probe data is inconsistent with the action of a positive braid."""


@dataclass(frozen=True)
class Step:
    node: int
    factor_index: int  # k of the factor being built
    max_degree_after: int | None


@dataclass
class Recovery:
    normal_form: GarsideNormalForm
    steps: list[Step] = field(default_factory=list)
    tables: list[ProbeTable] = field(default_factory=list)

    def transcript(self) -> str:
        lines = []
        if self.tables:
            lines.append(f"initial max degree {self.tables[0].max_degree}")
        for s in self.steps:
            lines.append(f"factor {s.factor_index}: strip {s.node} -> max degree {s.max_degree_after}")
        lines.append(f"NF: {self.normal_form}")
        return "\n".join(lines)


Chooser = Callable[[Iterable[int]], int]


def smallest(nodes: Iterable[int]) -> int:
    return min(nodes)


def random_chooser(rng: random.Random) -> Chooser:
    return lambda nodes: rng.choice(sorted(nodes))


def recover_full(c: TwistedComplex, choose: Chooser = smallest, max_steps: int = 10_000) -> Recovery:
    d = c.algebra.diagram
    base = probe(sphere_sum(c.algebra))
    table = probe(c)
    result = Recovery(normal_form=None, tables=[table])  # type: ignore[arg-type]
    factors: list[weyl.WeylElement] = []
    steps = 0
    while True:
        p = table.max_degree
        if p is None or p <= 2:
            if table != base:
                raise RecoveryError(f"probe table does not match the base configuration:\n{table.format()}")
            break
        k = p - 2
        w = weyl.identity(d)
        while True:
            tops = table.top_nodes
            if not tops:
                raise RecoveryError("max degree > 2 but no node reaches it")
            i = choose(tops)
            s = weyl.generator(d, i)
            if (w * s).length != w.length + 1:
                raise RecoveryError(f"stripping {i} does not extend the factor {weyl.reduced_word(w)} reducedly")
            w = w * s
            c = untwist(i, c)
            table = probe(c)
            result.tables.append(table)
            result.steps.append(Step(i, k, table.max_degree))
            steps += 1
            if steps > max_steps:
                raise RecoveryError("step limit exceeded")
            if table.max_degree is None or table.max_degree < k + 2:
                break
        if w.length == 0:
            raise RecoveryError("recovered an identity factor")
        factors.append(w)
    try:
        result.normal_form = _from_factors(d, factors, 0)
    except ValueError as exc:
        raise RecoveryError(f"recovered factors are not a normal form: {exc}") from None
    return result


def recover(c: TwistedComplex, d=None, choose: Chooser = smallest) -> GarsideNormalForm:
    if d is not None and d != c.algebra.diagram:
        raise ValueError("diagram does not match the complex")
    return recover_full(c, choose).normal_form


def action_on_spheres(word: BraidWord, alg: ZigzagAlgebra) -> TwistedComplex:
    return twist_word(word, sphere_sum(alg))


def distinguish(a: BraidWord, b: BraidWord, alg: ZigzagAlgebra | None = None) -> bool:
    """Whether the probe sequences seen while recovering ``a`` and ``b`` differ."""
    if not (a.is_positive and b.is_positive):
        raise ValueError("distinguish expects positive words")
    alg = alg or ZigzagAlgebra(a.diagram)
    ra = recover_full(action_on_spheres(a, alg))
    rb = recover_full(action_on_spheres(b, alg))
    return ra.tables != rb.tables or [s.node for s in ra.steps] != [s.node for s in rb.steps]
