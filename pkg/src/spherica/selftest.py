"""Oracle and property checks behind ``spherica selftest``."""

from __future__ import annotations

import itertools
import random
import time
from typing import Callable, Iterator

from . import garside, oracle, weyl
from .dynkin import DynkinDiagram, parse_type
from .garside import BraidWord
from .recover import action_on_spheres, recover
from .twist import twist
from .zigzag import ZigzagAlgebra, census, hom_dims, shift, spherical_object

Check = Callable[[], str]


def _cayley(name: str) -> str:
    rep = oracle.cayley_check(parse_type(name))
    if not rep.ok:
        raise AssertionError("; ".join(rep.problems))
    return str(rep)


def _word_problem(name: str, max_len: int) -> str:
    d = parse_type(name)
    words = [BraidWord.positive(d, w) for n in range(max_len + 1)
             for w in itertools.product(d.nodes, repeat=n)]
    pairs = 0
    for a in words:
        for b in words:
            if len(a) != len(b):
                continue
            if garside.equals(a, b) != oracle.brute_equal_positive(a, b):
                raise AssertionError(f"equals disagrees with oracle on {a} vs {b}")
            pairs += 1
    return f"word problem {name} len<={max_len}: {pairs} pairs agree"


def _configuration(name: str) -> str:
    d = parse_type(name)
    alg = ZigzagAlgebra(d)
    for i in d.nodes:
        for j in d.nodes:
            got = hom_dims(spherical_object(alg, i), spherical_object(alg, j))
            want = {0: 1, 2: 1} if i == j else ({1: 1} if d.adjacent(i, j) else {})
            if got != want:
                raise AssertionError(f"[S{i}, S{j}] = {got}, expected {want}")
    return f"configuration dims {name}"


def _twists_of_spheres(name: str) -> str:
    d = parse_type(name)
    alg = ZigzagAlgebra(d)
    s = {i: spherical_object(alg, i) for i in d.nodes}
    for i in d.nodes:
        if census(twist(i, s[i])) != census(shift(s[i], -1)):
            raise AssertionError(f"t{i} S{i} != S{i}[-1]")
        for j in d.nodes:
            if i == j:
                continue
            if d.adjacent(i, j):
                if census(twist(i, twist(j, s[i]))) != census(s[j]):
                    raise AssertionError(f"t{i} t{j} S{i} != S{j}")
            elif census(twist(i, s[j])) != census(s[j]):
                raise AssertionError(f"t{i} S{j} != S{j}")
    return f"twists of spheres {name}"


def _recovery(name: str, count: int, max_len: int, seed: int = 1) -> str:
    d = parse_type(name)
    alg = ZigzagAlgebra(d)
    rng = random.Random(seed)
    for _ in range(count):
        w = BraidWord.positive(d, [rng.choice(d.nodes) for _ in range(rng.randint(0, max_len))])
        got = recover(action_on_spheres(w, alg))
        want = garside.normalize(w)
        if str(got) != str(want):
            raise AssertionError(f"recovered {got} from {w}, expected {want}")
    return f"recovery {name}: {count} random words of length <= {max_len}"


def checks(level: str = "quick") -> Iterator[tuple[str, Check]]:
    yield "cayley A2", lambda: _cayley("A2")
    yield "cayley A3", lambda: _cayley("A3")
    yield "cayley D4", lambda: _cayley("D4")
    yield "word problem A2", lambda: _word_problem("A2", 5 if level == "quick" else 6)
    for name in ("A3", "D4") + (("E6",) if level == "full" else ()):
        yield f"configuration {name}", lambda name=name: _configuration(name)
        yield f"twists of spheres {name}", lambda name=name: _twists_of_spheres(name)
    yield "recovery A2", lambda: _recovery("A2", 20, 8)
    yield "recovery A3", lambda: _recovery("A3", 20, 8)
    if level == "full":
        yield "recovery D4", lambda: _recovery("D4", 50, 10)
        yield "recovery E6", lambda: _recovery("E6", 10, 6)


def run(level: str = "quick", out=print) -> bool:
    ok = True
    for label, check in checks(level):
        t = time.perf_counter()
        try:
            msg = check()
            out(f"PASS  {msg}  ({time.perf_counter() - t:.2f}s)")
        except AssertionError as exc:
            ok = False
            out(f"FAIL  {label}: {exc}")
    return ok
