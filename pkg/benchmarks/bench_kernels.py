"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Inputs are unminimized twist outputs (for ``eliminate``) and their hom
differentials (for ``rank_mod_p``), built once per diagram.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from spherica import _kernels_py
from spherica.dynkin import parse_type
from spherica.garside import BraidWord
from spherica.twist import twist, twist_word
from spherica.zigzag import ZigzagAlgebra, hom_complex, sphere_sum

try:
    from spherica import _kernels as compiled
except ImportError:
    compiled = None


def workload(name: str, count: int, seed: int = 0):
    d = parse_type(name)
    alg = ZigzagAlgebra(d)
    rng = random.Random(seed)
    complexes, matrices = [], []
    for _ in range(count):
        w = BraidWord.positive(d, [rng.choice(d.nodes) for _ in range(rng.randint(4, 8))])
        c = twist_word(w, sphere_sum(alg))
        raw = twist(rng.choice(d.nodes), c, minimal=False)
        complexes.append(raw)
        matrices += [m for m in hom_complex(raw, raw).maps.values() if m.size]
    return alg.p, complexes, matrices


def best_of(repeat: int, fn) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def run_eliminate(impl, complexes, p):
    for c in complexes:
        d = np.array(c.diff, dtype=np.int64, copy=True)
        impl.eliminate(d, c.nodes.copy(), c.positions.copy(), c.self_mask(1).astype(np.uint8), p)


def run_rank(impl, matrices, p):
    for m in matrices:
        impl.rank_mod_p(m, p)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--count", type=int, default=20)
    args = ap.parse_args()
    impls = [("python", _kernels_py)] + ([("cython", compiled)] if compiled else [])
    if compiled is None:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'diagram':8} {'kernel':10} {'backend':8} {'seconds':>9} {'speedup':>8}")
    for name in ("A3", "D4", "E6"):
        p, complexes, matrices = workload(name, args.count)
        for kernel, fn, data in (("eliminate", run_eliminate, complexes), ("rank", run_rank, matrices)):
            base = None
            for label, impl in impls:
                t = best_of(args.repeat, lambda: fn(impl, data, p))
                base = base or t
                print(f"{name:8} {kernel:10} {label:8} {t:9.4f} {base / t:7.1f}x")


if __name__ == "__main__":
    main()
