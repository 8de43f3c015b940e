"""Command-line front end.

Exit codes: 0 the property holds or the construction succeeded, 1 the
property fails (a witness or counterexample is emitted), 2 usage, format or
precondition error, 3 inconclusive search.
"""

from __future__ import annotations

import argparse
import shlex
import sys

from . import __version__
from .constructions import ConstructionError, completeness_counterexample, perfectness_counterexample
from .fsm import Completed, FsmError, InvalidInputError, format_word, run
from .reduction import p_reduce
from .relations import (
    alike_total,
    alike_under_suite,
    alikeness_partition,
    equiv_total,
    equiv_under_suite,
)
from .simulation import AlphabetMismatchError, UnreachableStatesError, bisimilar, isomorphic
from .textio import FormatError, format_fsm, format_relation, parse_word, read_fsm, read_suite
from .verdicts import (
    SearchConfig,
    Status,
    check_m_complete,
    check_m_perfect,
    completeness_bound,
)

HOLDS, FAILS, ERROR, INCONCLUSIVE = 0, 1, 2, 3


def _emit_machine(m, args, argv, extra=()):
    comments = ["generated by: pfsm " + shlex.join(argv), *extra]
    text = format_fsm(m, comments)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _suite_for(path, *machines):
    alphabet = []
    for m in machines:
        alphabet.extend(x for x in m.inputs if x not in alphabet)
    return read_suite(path, alphabet)


def cmd_run(args, argv):
    m = read_fsm(args.machine)
    state = args.state if args.state is not None else m.initial
    r = run(m, state, parse_word(args.word, m.inputs))
    if isinstance(r, Completed):
        print(f"COMPLETED {r.target} {format_word(r.output)}")
        return HOLDS
    print(f"BLOCKED {r.defined_prefix_length}")
    return FAILS


def _relation(args, on_suite, total):
    a, b = read_fsm(args.first), read_fsm(args.second)
    if args.suite:
        v = on_suite(a, a.initial, b, b.initial, _suite_for(args.suite, a, b))
    else:
        v = total(a, a.initial, b, b.initial)
    print(v.line())
    return HOLDS if v.holds else FAILS


def cmd_equiv(args, argv):
    return _relation(args, equiv_under_suite, equiv_total)


def cmd_alike(args, argv):
    return _relation(args, alike_under_suite, alike_total)


def cmd_preduce(args, argv):
    _emit_machine(p_reduce(read_fsm(args.machine)), args, argv)
    return HOLDS


def cmd_bisim(args, argv):
    a, b = read_fsm(args.first), read_fsm(args.second)
    if bisimilar(a, b):
        print("HOLDS")
        return HOLDS
    print("FAILS")
    return FAILS


def cmd_iso(args, argv):
    f = isomorphic(read_fsm(args.first), read_fsm(args.second))
    if f is None:
        print("FAILS")
        return FAILS
    sys.stdout.write(format_relation(f.items()))
    return HOLDS


def cmd_partition(args, argv):
    for block in alikeness_partition(read_fsm(args.machine)):
        print("block " + " ".join(map(str, block)))
    return HOLDS


def cmd_bound(args, argv):
    m = read_fsm(args.spec)
    print(completeness_bound(m, _suite_for(args.suite, m)))
    return HOLDS


def cmd_refute_complete(args, argv):
    m = read_fsm(args.spec)
    n = completeness_counterexample(m, _suite_for(args.suite, m), prune=args.prune)
    v = equiv_total(m, m.initial, n, n.initial)
    _emit_machine(n, args, argv, [f"witness: {v.line()}"])
    if args.out:
        print(v.line())
    return FAILS


def cmd_refute_perfect(args, argv):
    m = read_fsm(args.spec)
    tree = perfectness_counterexample(m, _suite_for(args.suite, m),
                                      parse_word(args.sigma, m.inputs))
    v = alike_total(m, m.initial, tree.fsm, tree.fsm.initial)
    _emit_machine(tree.fsm, args, argv, [f"witness: {v.line()}"])
    if args.out:
        print(v.line())
    return FAILS


def cmd_verify(args, argv):
    m = read_fsm(args.spec)
    suite = _suite_for(args.suite, m)
    cfg = SearchConfig(
        max_states=args.m,
        outputs=tuple(args.alphabet_out.split(",")) if args.alphabet_out else None,
        candidate_cap=args.cap,
        workers=args.workers,
    )
    check = check_m_complete if args.mode == "complete" else check_m_perfect
    result = check(m, suite, cfg)
    print(f"examined {result.examined} candidates")
    if result.status is Status.INCONCLUSIVE:
        print("INCONCLUSIVE")
        return INCONCLUSIVE
    if result.status is Status.HOLDS:
        print("HOLDS")
        return HOLDS
    print(result.witness.line())
    _emit_machine(result.counterexample, args, argv, [f"witness: {result.witness.line()}"])
    return FAILS


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pfsm", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"pfsm {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("run", help="run a word from a state")
    s.add_argument("machine")
    s.add_argument("word")
    s.add_argument("--state")
    s.set_defaults(func=cmd_run)

    for verb, func, what in (("equiv", cmd_equiv, "equivalence"), ("alike", cmd_alike, "alikeness")):
        s = sub.add_parser(verb, help=f"decide {what} of two machines")
        s.add_argument("first")
        s.add_argument("second")
        s.add_argument("--suite", help="restrict to the words of this suite file")
        s.set_defaults(func=func)

    s = sub.add_parser("preduce", help="quotient by state alikeness")
    s.add_argument("machine")
    s.add_argument("--out")
    s.set_defaults(func=cmd_preduce)

    for verb, func, what in (("bisim", cmd_bisim, "simulations both ways"),
                             ("iso", cmd_iso, "a state isomorphism")):
        s = sub.add_parser(verb, help=f"look for {what} between two machines")
        s.add_argument("first")
        s.add_argument("second")
        s.set_defaults(func=func)

    s = sub.add_parser("partition", help="alikeness classes of a machine")
    s.add_argument("machine")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("bound", help="size at which the suite cannot be complete")
    s.add_argument("spec")
    s.add_argument("suite")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("refute-complete", help="build a machine the suite cannot detect")
    s.add_argument("spec")
    s.add_argument("suite")
    s.add_argument("--prune", action="store_true", help="drop unreachable states")
    s.add_argument("--out")
    s.set_defaults(func=cmd_refute_complete)

    s = sub.add_parser("refute-perfect", help="build a tree machine alike on the suite only")
    s.add_argument("spec")
    s.add_argument("suite")
    s.add_argument("--sigma", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_refute_perfect)

    s = sub.add_parser("verify", help="brute-force m-completeness or m-perfectness")
    s.add_argument("spec")
    s.add_argument("suite")
    s.add_argument("--mode", choices=("complete", "perfect"), default="complete")
    s.add_argument("-m", type=_positive, required=True, help="maximum implementation states")
    s.add_argument("--cap", type=int, help="stop after this many candidates")
    s.add_argument("--alphabet-out", help="comma-separated candidate output symbols")
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except (FormatError, FsmError, InvalidInputError, ConstructionError,
            UnreachableStatesError, AlphabetMismatchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
