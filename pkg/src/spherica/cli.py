"""Command-line interface.

Configuration precedence is flags, then the ``SPHERICA_TYPE`` (e.g. ``D4``)
and ``SPHERICA_FIELD`` environment variables, then defaults (A2, p = 32003).

Exit codes: 0 success / equal, 1 negative verdict or failed check,
2 usage error, 3 malformed word, 4 invalid diagram, 5 non-prime field.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import garside, weyl
from .dynkin import DiagramError, DynkinDiagram, build, parse_type
from .garside import WordError, parse_word
from .linalg import is_prime
from .recover import RecoveryError, action_on_spheres, recover_full
from .twist import probe, twist_word
from .zigzag import DEFAULT_FIELD, ZigzagAlgebra, census, dump, spherical_object, sphere_sum

EXIT_NOT_EQUAL = 1
EXIT_WORD = 3
EXIT_DIAGRAM = 4
EXIT_FIELD = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _diagram(args) -> DynkinDiagram:
    try:
        if args.type is not None:
            if args.rank is None:
                if len(args.type) == 1:
                    raise CliError(f"--type {args.type} needs --rank", EXIT_DIAGRAM)
                return parse_type(args.type)
            return build(args.type, args.rank)
        env = os.environ.get("SPHERICA_TYPE")
        if env:
            d = parse_type(env)
            return build(d.family, args.rank) if args.rank is not None else d
        return build("A", args.rank if args.rank is not None else 2)
    except DiagramError as exc:
        raise CliError(str(exc), EXIT_DIAGRAM) from None


def _field(args) -> int:
    p = args.field
    if p is None:
        env = os.environ.get("SPHERICA_FIELD")
        try:
            p = int(env) if env else DEFAULT_FIELD
        except ValueError:
            raise CliError(f"SPHERICA_FIELD={env!r} is not an integer", EXIT_FIELD) from None
    if not is_prime(p):
        raise CliError(f"field characteristic {p} is not prime", EXIT_FIELD)
    return p


def _word(d: DynkinDiagram, text: str):
    try:
        return parse_word(d, text)
    except WordError as exc:
        raise CliError(f"malformed word {text!r}: {exc}", EXIT_WORD) from None


def cmd_normalize(args) -> int:
    d = _diagram(args)
    print(garside.normalize(_word(d, args.word)))
    return 0


def cmd_equal(args) -> int:
    d = _diagram(args)
    a, b = _word(d, args.word1), _word(d, args.word2)
    if garside.equals(a, b):
        print("equal")
        return 0
    print("not equal")
    return EXIT_NOT_EQUAL


def cmd_weyl_info(args) -> int:
    d = _diagram(args)
    w0 = weyl.longest_element(d)
    print(f"type: {d.name}")
    try:
        print(f"order: {len(weyl.enumerate_group(d, cap=args.cap))}")
    except weyl.WeylError:
        print(f"order: not enumerated (cap {args.cap})")
    print(f"positive roots: {len(d.positive_roots)}")
    print(f"length of w0: {w0.length}")
    print("w0 automorphism: " + " ".join(f"{i}->{j}" for i, j in weyl.w0_automorphism(d).items()))
    if args.element is not None:
        w = garside.project(_word(d, args.element))
        print("element: " + (" ".join(map(str, weyl.reduced_word(w))) or "id"))
        print(f"length: {w.length}")
        print("left descents: " + " ".join(map(str, sorted(w.left_descents))))
        print("right descents: " + " ".join(map(str, sorted(w.right_descents))))
    return 0


def cmd_twist(args) -> int:
    d = _diagram(args)
    alg = ZigzagAlgebra(d, _field(args))
    word = _word(d, args.word)
    if args.object is not None:
        try:
            d.check_node(args.object)
        except DiagramError as exc:
            raise CliError(str(exc), EXIT_DIAGRAM) from None
        start = spherical_object(alg, args.object)
    else:
        start = sphere_sum(alg)
    c = twist_word(word, start)
    print(f"generators: {len(c)}")
    for (i, n), mult in sorted(census(c).items()):
        print(f"P{i} at {n}" + (f" x{mult}" if mult > 1 else ""))
    if args.dump:
        print(dump(c), end="")
    return 0


def cmd_probe(args) -> int:
    d = _diagram(args)
    alg = ZigzagAlgebra(d, _field(args))
    table = probe(action_on_spheres(_word(d, args.word), alg))
    print(table.format(machine=True))
    return 0


def cmd_recover(args) -> int:
    d = _diagram(args)
    alg = ZigzagAlgebra(d, _field(args))
    word = _word(d, args.word)
    expected = garside.normalize(word)
    # negative letters: recover the positive part, keep the Delta power
    positive = word if word.is_positive else garside.GarsideNormalForm(
        d, 0, expected.factors).render()
    try:
        rec = recover_full(action_on_spheres(positive, alg))
    except RecoveryError as exc:
        print(f"recovery failed: {exc}")
        return 1
    nf = rec.normal_form
    if not word.is_positive:
        nf = garside.GarsideNormalForm(d, nf.delta_power + expected.delta_power, nf.factors)
    print(rec.transcript())
    if not word.is_positive:
        print(f"with Delta power {expected.delta_power}: {nf}")
    ok = str(nf) == str(expected)
    print("round-trip: " + ("OK" if ok else f"MISMATCH (normalize gives {expected})"))
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    from . import selftest
    return 0 if selftest.run(args.level) else 1


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="diagram family A/D/E, or a full name like D4")
    common.add_argument("--rank", type=int)
    field_opt = argparse.ArgumentParser(add_help=False)
    field_opt.add_argument("--field", type=int, help="prime characteristic (default 32003)")

    parser = argparse.ArgumentParser(prog="spherica", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="Garside normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", parents=[common], help="decide equality of two braid words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("weyl-info", parents=[common], help="Weyl group data")
    p.add_argument("--element", help="word whose Weyl image to describe")
    p.add_argument("--cap", type=int, default=weyl.ENUMERATION_CAP)
    p.set_defaults(func=cmd_weyl_info)

    p = sub.add_parser("twist", parents=[common, field_opt], help="apply a braid to S_i or the sum of all S_i")
    p.add_argument("--word", required=True)
    p.add_argument("--object", type=int)
    p.add_argument("--dump", action="store_true")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("probe", parents=[common, field_opt], help="probe table of t_word on the sum of all S_i")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("recover", parents=[common, field_opt], help="recover a braid from its action")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("selftest", help="run oracle and property checks")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"spherica: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
