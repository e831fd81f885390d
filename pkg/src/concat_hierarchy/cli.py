"""Command line entry point.

Exit codes: 0 success, 1 usage error, 2 input error, 3 resource cap,
4 property failure or internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from .automata import compile, parse_dfa, parse_regex
from .deciders import LEVELS, analyze
from .equations import DEFAULT_MAX_TUPLES
from .errors import InconsistencyError, InputError, ResourceError
from .monoid import FiniteMonoid
from .oracles import RandomMorphismSpec, random_morphism
from .properties import PROPERTIES
from .syntactic import DEFAULT_MAX_MONOID, SyntacticMorphism

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_RESOURCE, EXIT_PROPERTY = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="concat-hierarchy",
                     description="Decide low levels of the Straubing-Therien hierarchy.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyze one regular language")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="inline regex (or DFA JSON with --format dfa)")
    src.add_argument("--file", help="read the input from a file")
    a.add_argument("--format", choices=("regex", "dfa"), default="regex")
    a.add_argument("--alphabet", help="explicit alphabet, e.g. 'abc'")
    a.add_argument("--level", choices=("all",) + tuple(LEVELS), default="all")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.add_argument("--timings", action="store_true",
                   help="include per-stage timings (makes output run-dependent)")
    a.add_argument("--max-monoid", type=_positive, default=DEFAULT_MAX_MONOID)
    a.add_argument("--max-tuples", type=_positive, default=DEFAULT_MAX_TUPLES)

    s = sub.add_parser("selftest", help="run the random-morphism property battery")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--max-states", type=_positive, default=5)
    s.add_argument("--alphabet-size", type=_positive, default=3)
    s.add_argument("--max-monoid", type=_positive, default=120)
    s.add_argument("--mutate", action="store_true",
                   help="perturb each multiplication table (the battery must then fail)")
    return parser


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "selftest":
        return selftest(args.seed, args.count, max_states=args.max_states,
                        alphabet_size=args.alphabet_size, monoid_cap=args.max_monoid,
                        mutate=args.mutate)
    return _analyze(args)


def _analyze(args) -> int:
    try:
        if args.file is not None:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = args.input
        if args.format == "regex":
            text = text.strip()
            dfa = compile(parse_regex(text, args.alphabet))
        else:
            if args.alphabet is not None:
                print("usage error: --alphabet only applies to regex input", file=sys.stderr)
                return EXIT_USAGE
            dfa = parse_dfa(text)
        report = analyze(dfa, source=text if args.file is None else args.file,
                         level=args.level, max_monoid=args.max_monoid,
                         max_tuples=args.max_tuples)
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    out = report.to_json(args.timings) + "\n" if args.json else report.to_text(args.timings)
    sys.stdout.write(out)
    return EXIT_OK


def _mutant(sm: SyntacticMorphism) -> SyntacticMorphism:
    n = sm.size
    if n < 2:
        return sm
    table = sm.monoid.table.copy()
    table[n - 1, n - 1] = (table[n - 1, n - 1] + 1) % n
    monoid = FiniteMonoid(table, generators=sm.monoid.generators)
    return SyntacticMorphism(sm.alphabet, monoid, sm.functions, sm.right, sm.witnesses,
                             sm.accepting_mask, sm.dfa)


def selftest(seed: int, count: int, max_states: int = 5, alphabet_size: int = 3,
             monoid_cap: int = 120, mutate: bool = False, out=None) -> int:
    out = sys.stdout if out is None else out
    if count < 1:
        print("usage error: count must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    passed = {name: 0 for name in PROPERTIES}
    start = time.perf_counter()
    sizes = []
    for i in range(count):
        spec = RandomMorphismSpec(seed + i, max_states, alphabet_size, monoid_cap)
        try:
            sm = random_morphism(spec)
        except ResourceError as exc:
            print(f"resource error: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
        if mutate:
            sm = _mutant(sm)
        sizes.append(sm.size)
        for name, prop in PROPERTIES.items():
            try:
                ok = prop(sm)
            except (InconsistencyError, AssertionError) as exc:
                ok = False
                print(f"  {name}: {exc}", file=sys.stderr)
            if not ok:
                print(f"property {name!r} failed for seed {spec.seed} "
                      f"(monoid size {sm.size})", file=out)
                return EXIT_PROPERTY
            passed[name] += 1
    for name, k in passed.items():
        print(f"{name:<24}{k}/{count}", file=out)
    print(f"monoid sizes: max {max(sizes)}, mean {np.mean(sizes):.1f}; "
          f"{time.perf_counter() - start:.1f}s", file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
