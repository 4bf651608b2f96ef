"""Command-line front end.

Exit codes: 0 success / set found / stable, 2 no super-stable set exists
(or the checked set is not super-stable), 3 fuzz discrepancy, 1 error.
Errors go to standard error prefixed with ``error: <kind>:``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import InvariantError, ParseError, SuperStableError
from .fuzzing import fuzz
from .generate import GeneratorConfig, SpaGeneratorConfig, generate, generate_spa
from .io import (format_instance, format_matching, format_spa, parse_element_set,
                 parse_instance, parse_matching, parse_spa)
from .solver import solve, trace_records
from .spa import reduce, spa_super_stable
from .stability import BRUTE_FORCE_LIMIT, brute_force_all, is_super_stable

EXIT_OK, EXIT_ERROR, EXIT_NONE, EXIT_DISCREPANCY = 0, 1, 2, 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt_set(items) -> str:
    return "{" + ", ".join(map(str, sorted(items))) + "}"


def _print_outcome(outcome, args, describe=_fmt_set) -> int:
    if args.json:
        payload = outcome.to_dict(trace=args.trace)
        if describe is not _fmt_set and outcome.found:
            payload["matching"] = [list(p) for p in sorted(describe.pairs(outcome.solution))]
        print(json.dumps(payload, sort_keys=True))
    else:
        if outcome.found:
            print(f"Found: {describe(outcome.solution)}")
        else:
            extra = f" (e_R = {outcome.augmenting_element})" \
                if outcome.augmenting_element is not None else ""
            print(f"none exists: {outcome.reason}{extra}")
        if args.trace:
            for record in trace_records(outcome):
                print(json.dumps(record, sort_keys=True))
    return EXIT_OK if outcome.found else EXIT_NONE


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.file))
    return _print_outcome(solve(inst, debug=args.debug), args)


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.file))
    report = is_super_stable(inst, parse_element_set(args.set))
    if report:
        print("super-stable")
        return EXIT_OK
    if report.dependent_in is not None:
        print(f"not super-stable: dependent in {report.dependent_in}")
    else:
        print(f"not super-stable: element {report.blocking_element} is in neither dom set")
    return EXIT_NONE


def cmd_enumerate(args) -> int:
    inst = parse_instance(_read(args.file))
    for items in brute_force_all(inst, limit=args.limit):
        print(_fmt_set(items))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    result = fuzz(args.seed, args.count, args.max_e)
    if result.ok:
        print(f"ok: {result.checked} instances checked, "
              f"{result.found} with a super-stable set")
        return EXIT_OK
    print(f"discrepancy on instance {result.checked}:")
    for problem in result.problems:
        print(f"  {problem}")
    print(format_instance(result.counterexample), end="")
    return EXIT_DISCREPANCY


def cmd_generate(args) -> int:
    if args.spa:
        print(format_spa(generate_spa(SpaGeneratorConfig(
            seed=args.seed, max_pairs=args.max_e, tie_density=args.tie_density))), end="")
    else:
        print(format_instance(generate(GeneratorConfig(
            seed=args.seed, max_elements=args.max_e, tie_density=args.tie_density))), end="")
    return EXIT_OK


class _PairNames:
    """Formats element sets of a reduced SPA instance as student-project pairs."""

    def __init__(self, reduction):
        self.reduction = reduction

    def pairs(self, elements):
        return self.reduction.to_pairs(elements)

    def __call__(self, elements) -> str:
        return "{" + ", ".join(f"({s}, {p})" for s, p in sorted(self.pairs(elements))) + "}"


def cmd_spa_solve(args) -> int:
    reduction = reduce(parse_spa(_read(args.file)))
    outcome = solve(reduction.instance, debug=args.debug)
    return _print_outcome(outcome, args, describe=_PairNames(reduction))


def cmd_spa_check(args) -> int:
    spa = parse_spa(_read(args.file))
    text = _read(args.matching) if os.path.exists(args.matching) else args.matching
    matching = parse_matching(text)
    if spa_super_stable(spa, matching):
        print("super-stable")
        return EXIT_OK
    print("not super-stable")
    return EXIT_NONE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superstable",
        description="Super-stable common independent sets of two matroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the solver on an instance file")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="emit one record per iteration")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--debug", action="store_true", help="check internal invariants")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check whether a set is super-stable")
    p.add_argument("file")
    p.add_argument("set", help="element ids, e.g. '{0,2}' or '0 2'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list all super-stable sets by brute force")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=BRUTE_FORCE_LIMIT)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("fuzz", help="cross-check the solver against brute force")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-e", type=int, default=8)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("generate", help="print a random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-e", type=int, default=8)
    p.add_argument("--tie-density", type=float, default=0.3)
    p.add_argument("--spa", action="store_true", help="generate an SPA-ST instance")
    p.set_defaults(func=cmd_generate)

    spa = sub.add_parser("spa", help="student-project allocation with ties")
    spa_sub = spa.add_subparsers(dest="spa_command", required=True)
    p = spa_sub.add_parser("solve", help="solve an SPA-ST file via the matroid reduction")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--debug", action="store_true")
    p.set_defaults(func=cmd_spa_solve)
    p = spa_sub.add_parser("check", help="check a matching for super-stability")
    p.add_argument("file")
    p.add_argument("matching", help="file of 's p' lines, or inline '1:2,3:1'")
    p.set_defaults(func=cmd_spa_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
    except InvariantError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
    except SuperStableError as exc:
        print(f"error: input: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
