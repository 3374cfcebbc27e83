"""Command line interface.

Exit codes: 0 on success (all suites passing), 1 when a verification
suite fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .counting import best_coprime_pair, binomial, hk_lower_bound, stirling2, ukl_size_formula
from .dfa import Dfa, minimize, parse, serialize
from .monoid import (
    DEFAULT_MAX_ELEMENTS,
    ClosureBudgetError,
    closure,
    largest_two_generated,
    transformation_monoid,
    ukl_generators,
)
from .root import root_automaton, unary_root
from .verify import (
    VerifyReport,
    suite_counting,
    suite_equivalence_structure,
    suite_full_tn,
    suite_gap,
    suite_lower_bound,
    suite_min_dfa,
    suite_start_final_variation,
    suite_unary,
)

SUITES = (
    "full-tn",
    "min-dfa",
    "equivalence",
    "start-final",
    "unary",
    "counting",
    "gap",
    "lower-bound",
    "all",
)


def _load(path: str) -> Dfa:
    return parse(Path(path).read_text(encoding="utf-8"))


def _emit(d: Dfa, output: str | None) -> None:
    if output:
        Path(output).write_text(serialize(d), encoding="utf-8")


def cmd_root(args) -> int:
    d = _load(args.input)
    out = root_automaton(d, max_elements=args.max_elements).dfa
    if args.minimize:
        out = minimize(out)
    _emit(out, args.output)
    print(f"states={out.n}")
    return 0


def cmd_unary_root(args) -> int:
    d = _load(args.input)
    out = unary_root(d)
    if args.minimize:
        out = minimize(out)
    _emit(out, args.output)
    print(f"states={out.n}")
    return 0


def cmd_minimize(args) -> int:
    out = minimize(_load(args.input))
    _emit(out, args.output)
    print(f"states={out.n}")
    return 0


def cmd_monoid(args) -> int:
    m = transformation_monoid(_load(args.input), max_elements=args.max_elements)
    print(f"size={len(m)}")
    for rank, count in m.rank_histogram().items():
        print(f"rank {rank}: {count}")
    return 0


def cmd_ukl(args) -> int:
    if args.n is not None:
        k, l = best_coprime_pair(args.n)
        formula = ukl_size_formula(k, l)
        payload = {
            "n": args.n,
            "k": k,
            "l": l,
            "formula": formula,
            "predicted_root_states": formula - binomial(args.n, 2),
        }
        if args.json:
            print(json.dumps(payload))
        else:
            print(f"best k={k} l={l}")
            print(f"formula={formula}")
            print(f"predicted_root_states={payload['predicted_root_states']}")
        return 0
    formula = ukl_size_formula(args.k, args.l)
    payload: dict = {"k": args.k, "l": args.l, "formula": formula}
    code = 0
    if args.enumerate:
        size = len(closure(ukl_generators(args.k, args.l)))
        payload["closure"] = size
        payload["agree"] = size == formula
        code = 0 if size == formula else 1
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"formula={formula}")
        if args.enumerate:
            print(f"closure={payload['closure']}")
            print("AGREE" if payload["agree"] else "DISAGREE")
    return code


def cmd_stirling(args) -> int:
    print(stirling2(args.n, args.k))
    return 0


def cmd_bound(args) -> int:
    print(hk_lower_bound(args.n))
    return 0


def cmd_largest2(args) -> int:
    size, (f, g) = largest_two_generated(args.n, max_n=args.max_n)
    print(f"max={size}")
    print(f"generators {f.one_row()} {g.one_row()}")
    return 0


def _verify_reports(args) -> list[VerifyReport]:
    name = args.suite
    if name == "all":
        reports = []
        for n in range(1, 7):
            reports.append(suite_full_tn(n))
        for k, l in ((2, 3), (3, 4)):
            reports.append(suite_min_dfa(k, l))
            reports.append(suite_equivalence_structure(k, l))
        reports.append(suite_start_final_variation(2, 3))
        reports.append(suite_unary(12, seed=args.seed))
        reports.append(suite_counting())
        reports.append(suite_gap(40))
        reports.append(suite_lower_bound(30))
        return reports
    if name == "full-tn":
        top = args.max_n or 6
        return [suite_full_tn(n) for n in range(1, top + 1)]
    if name in ("min-dfa", "equivalence"):
        fn = suite_min_dfa if name == "min-dfa" else suite_equivalence_structure
        if args.k is not None or args.l is not None:
            if args.k is None or args.l is None:
                raise ValueError("pass both --k and --l")
            return [fn(args.k, args.l)]
        top = args.max_n or 7
        pairs = [(2, 3)] + ([(3, 4)] if top >= 7 else [])
        return [fn(k, l) for k, l in pairs]
    if name == "start-final":
        k = args.k if args.k is not None else 2
        l = args.l if args.l is not None else 3
        return [suite_start_final_variation(k, l)]
    if name == "unary":
        return [suite_unary(args.max_n or 12, seed=args.seed)]
    if name == "counting":
        return [suite_counting()]
    if name == "gap":
        return [suite_gap(args.max_n or 40)]
    if name == "lower-bound":
        return [suite_lower_bound(args.max_n or 30)]
    raise ValueError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    reports = _verify_reports(args)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"reports": [r.to_dict() for r in reports], "pass": ok}))
    else:
        for r in reports:
            print(r.format_table())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regroot",
        description="Roots of regular languages via transformation monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, minimize_flag=True):
        p.add_argument("input", help="input automaton in the dfa text format")
        p.add_argument("-o", "--output", help="write the resulting automaton here")
        if minimize_flag:
            p.add_argument("--minimize", action="store_true", help="minimize before writing")

    p = sub.add_parser("root", help="build the automaton for root(L)")
    add_io(p)
    p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("unary-root", help="root of a one-letter language, in place")
    add_io(p)
    p.set_defaults(func=cmd_unary_root)

    p = sub.add_parser("minimize", help="canonical minimal automaton")
    add_io(p, minimize_flag=False)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("monoid", help="transformation monoid size and rank histogram")
    p.add_argument("input")
    p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    p.set_defaults(func=cmd_monoid)

    p = sub.add_parser("ukl", help="two-generated monoid sizes")
    p.add_argument("-k", type=int)
    p.add_argument("-l", type=int)
    p.add_argument("-n", type=int, help="report the best coprime split of n")
    p.add_argument("--enumerate", action="store_true", help="cross-check by closure enumeration")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ukl)

    p = sub.add_parser("stirling", help="Stirling number of the second kind")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("bound", help="analytic lower bound on the best two-generated size")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("largest2", help="exhaustive largest two-generated submonoid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=4, help="degree budget for the search")
    p.set_defaults(func=cmd_largest2)

    p = sub.add_parser("verify", help="run a reproduction suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-k", type=int)
    p.add_argument("-l", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    if args.command == "ukl" and (args.n is None) == (args.k is None or args.l is None):
        print("error: pass either -n, or both -k and -l", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, ClosureBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
