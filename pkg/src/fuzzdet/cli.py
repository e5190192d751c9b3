"""Command line front end.

Subcommands: eval, det, equiv, semiring. Reports go to stdout and are
byte-identical across runs on the same input; diagnostics and --stats go to
stderr. Exit codes: 0 success, 1 not equivalent, 2 usage or input errors,
3 a construction hit its state cap.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from .automata import FuzzyAutomaton, evaluate, find_witness
from .determinize import (
    DEFAULT_CAP,
    DetOutcome,
    brzozowski,
    d_automaton,
    nerode,
    preflight,
    psi_d_automaton,
    reverse_nerode,
)
from .errors import FuzzdetError
from .formats import (
    export_dot,
    format_word,
    parse_automaton,
    parse_matrix,
    parse_word,
)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_USAGE = 2
EXIT_CAP = 3

METHODS = ("nerode", "rnerode", "incl", "brzozowski", "psi")


def _load(path: str) -> FuzzyAutomaton:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise FuzzdetError(f"cannot read {path}: {e.strerror}") from None
    return parse_automaton(text)


def _determinize(a: FuzzyAutomaton, method: str, cap: int,
                 psi_path: str | None) -> DetOutcome:
    if method == "nerode":
        return nerode(a, cap)
    if method == "rnerode":
        return reverse_nerode(a, cap)
    if method == "incl":
        return d_automaton(a, cap)
    if method == "brzozowski":
        return brzozowski(a, cap)
    if method == "psi":
        psi = None
        if psi_path is not None and psi_path != "identity":
            try:
                with open(psi_path, encoding="utf-8") as f:
                    text = f.read()
            except OSError as e:
                raise FuzzdetError(f"cannot read {psi_path}: {e.strerror}") from None
            psi = parse_matrix(text, a.lattice, a.n)
        return psi_d_automaton(a, psi, cap)
    raise FuzzdetError(f"unknown method {method!r}")


def _closure_line(a: FuzzyAutomaton, cap: int = DEFAULT_CAP) -> str:
    report = preflight(a, cap)
    if report.closure.closed:
        k = report.closure.k
        return f"finite, k={k}, bound {k}^{report.n}={report.bound}"
    return f"cap exceeded at {report.closure.cap}"


def cmd_eval(args) -> int:
    a = _load(args.file)
    word = parse_word(args.word, a.alphabet)
    print(a.lattice.format_value(evaluate(a, word)))
    return EXIT_OK


def cmd_det(args) -> int:
    a = _load(args.file)
    closure = _closure_line(a)
    print(f"semiring: {closure}")
    if closure.startswith("cap exceeded"):
        print("warning: membership values did not close, "
              "termination is not guaranteed", file=sys.stderr)
    outcome = _determinize(a, args.method, args.max_states, args.psi)
    if args.stats:
        s = outcome.stats
        print(f"stats: vertices={s.vertices} closure_checks={s.closure_checks} "
              f"elapsed={s.elapsed:.3f}s", file=sys.stderr)
    if not outcome.ok:
        r = outcome.result
        print(f"cap exceeded: {r.states_built} states built (max-states {r.cap})")
        return EXIT_CAP
    c = outcome.cdfa
    fmt = c.lattice.format_value
    print(f"states: {c.n}")
    for s in range(c.n):
        word = format_word(c.labels[s].word)
        print(f"state {s + 1}: word={word}, terminal={fmt(c.terminal[s])}")
    if args.dot is not None:
        text = export_dot(c)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            with open(args.dot, "w", encoding="utf-8") as f:
                f.write(text)
    return EXIT_OK


def cmd_equiv(args) -> int:
    a1 = _load(args.file1)
    a2 = _load(args.file2)
    if a1.lattice != a2.lattice:
        raise FuzzdetError(
            f"lattices differ: {a1.lattice.describe()} vs {a2.lattice.describe()}")
    if a1.alphabet != a2.alphabet:
        raise FuzzdetError(f"alphabets differ: {a1.alphabet} vs {a2.alphabet}")
    methods = args.method.split(",")
    if len(methods) == 1:
        methods = methods * 2
    if len(methods) != 2 or any(m not in METHODS for m in methods):
        raise FuzzdetError(f"--method takes one or two of {', '.join(METHODS)}")
    outcomes = []
    for a, m in zip((a1, a2), methods):
        outcome = _determinize(a, m, args.max_states, args.psi)
        if not outcome.ok:
            r = outcome.result
            print(f"cap exceeded: {r.states_built} states built "
                  f"(max-states {r.cap})", file=sys.stderr)
            return EXIT_CAP
        outcomes.append(outcome.cdfa)
    witness = find_witness(outcomes[0], outcomes[1])
    if witness is None:
        print("equivalent")
        return EXIT_OK
    print(f"not equivalent, witness: {format_word(witness)}")
    return EXIT_NOT_EQUIVALENT


def cmd_semiring(args) -> int:
    a = _load(args.file)
    print(_closure_line(a, args.cap))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzdet",
        description="Evaluate and crisp-determinize fuzzy finite automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="membership degree of one word")
    p.add_argument("file", help="automaton document")
    p.add_argument("word", help="dot-separated symbols, or _ for the empty word")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("det", help="determinize to a cdfa and report it")
    p.add_argument("file", help="automaton document")
    p.add_argument("--method", choices=METHODS, default="incl")
    p.add_argument("--psi", default=None, metavar="FILE",
                   help="psi matrix document, or 'identity' (psi method only)")
    p.add_argument("--max-states", type=int, default=DEFAULT_CAP, metavar="N")
    p.add_argument("--dot", default=None, metavar="FILE",
                   help="write DOT here, '-' for stdout")
    p.add_argument("--stats", action="store_true",
                   help="print build counters to stderr")
    p.set_defaults(handler=cmd_det)

    p = sub.add_parser("equiv", help="compare the languages of two automata")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--method", default="incl", metavar="M[,M]",
                   help="construction per input, one name or a comma pair")
    p.add_argument("--psi", default=None, metavar="FILE")
    p.add_argument("--max-states", type=int, default=DEFAULT_CAP, metavar="N")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("semiring", help="close the value set, report the k^n bound")
    p.add_argument("file", help="automaton document")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N",
                   help="stop after this many distinct values")
    p.set_defaults(handler=cmd_semiring)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handler: Callable = args.handler
    try:
        return handler(args)
    except FuzzdetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
