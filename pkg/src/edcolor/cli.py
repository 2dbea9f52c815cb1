"""Command line front end.

Exit codes: 0 success, 1 input error or invalid coloring, 2 solver budget
exhausted, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from .coloring import read_coloring, validate, write_coloring
from .constructions import NoClosedForm, OutOfRange, construct
from .graph import GraphClassSpec, GraphFormatError, build, random_connected_graph, read_graph, write_graph
from .partitions import PARTITION_CAP, equitable_pair_fast, min_equitable_pair
from .solver import DEFAULT_BUDGET, BudgetExhausted, ConstraintSet, solve
from .survey import SURVEY_FAMILIES, parse_family, run_survey

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_SEED = 20240601

log = logging.getLogger("edcolor")


class InputError(Exception):
    pass


def _spec(family: str, params: list[int], complemented: bool) -> GraphClassSpec:
    try:
        base, named_complement = parse_family(family)
        return GraphClassSpec(base, tuple(params), complemented or named_complement)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        if len(args.params) != 1 or args.params[0] < 1:
            raise InputError("random takes one parameter n >= 1")
        g = random_connected_graph(args.params[0], random.Random(args.seed), args.p)
    else:
        g = build(_spec(args.family, args.params, args.complement))
    _emit(write_graph(g), args.out)
    return EXIT_OK


def cmd_chromatic(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    cs = ConstraintSet.from_name(args.invariant)
    try:
        result = solve(g, cs, args.budget)
    except BudgetExhausted as exc:
        print(f"unknown: {cs.name} in [{exc.lower}, {exc.upper}] "
              f"(budget of {args.budget} nodes exhausted)", file=sys.stderr)
        return EXIT_BUDGET
    print(result.value)
    if args.out:
        Path(args.out).write_text(write_coloring(result.witness), encoding="utf-8")
    else:
        sys.stdout.write(write_coloring(result.witness))
    log.info("%s = %d after %d nodes in %.3fs", cs.name, result.value, result.nodes, result.elapsed)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    c = read_coloring(_read(args.coloring))
    if c.n != g.n:
        raise InputError(f"coloring covers {c.n} vertices but the graph has {g.n}")
    report = validate(g, c)
    print(report.to_json())
    return EXIT_OK if report.equitable_dominator else EXIT_INPUT


def cmd_construct(args: argparse.Namespace) -> int:
    spec = _spec(args.family, args.params, args.complement)
    try:
        coloring = construct(spec)
    except (OutOfRange, NoClosedForm) as exc:
        raise InputError(f"{spec}: {exc}") from None
    report = validate(build(spec), coloring)
    if not report.equitable_dominator:
        print(f"internal error: construction for {spec} fails verification: {report.violations()}",
              file=sys.stderr)
        return EXIT_INTERNAL
    _emit(write_coloring(coloring), args.out)
    print(f"{spec}: {coloring.k} colors, verified", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_bipartite(args: argparse.Namespace) -> int:
    a, b = args.a, args.b
    if a < 1 or b < 1:
        raise InputError("a and b must be positive")
    pair = min_equitable_pair(a, b) if a + b <= PARTITION_CAP else equitable_pair_fast(a, b)
    print(pair.color_count)
    print("A:", " ".join(map(str, pair.part_a)))
    print("B:", " ".join(map(str, pair.part_b)))
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    unknown = [f for f in families if f not in SURVEY_FAMILIES]
    if unknown:
        raise InputError(f"unknown survey families {unknown}; choose from {', '.join(SURVEY_FAMILIES)}")
    report = run_survey(families, args.max_size, args.budget, args.min_size, args.jobs)
    _emit(report.to_json() if args.format == "json" else report.to_csv(), args.out)
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edcolor", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--complement", action="store_true", help="use the complement graph")
        p.add_argument("family")
        p.add_argument("params", nargs="+", type=int)
        p.add_argument("-o", "--out")

    p = sub.add_parser("gen", help="write a family graph (or 'random N') as an edge list")
    family_args(p)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--p", type=float, default=0.4, help="extra-edge probability for random graphs")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chromatic", help="exact chi, chi-e, chi-d or chi-ed with a witness")
    p.add_argument("graph")
    p.add_argument("--invariant", choices=["chi", "chi-e", "chi-d", "chi-ed"], default="chi-ed")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("verify", help="check a coloring; exit 0 iff equitable dominator")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="write and verify a family's constructive coloring")
    family_args(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bipartite", help="chi_ed of K_{a,b} and the partition pair behind it")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_bipartite)

    p = sub.add_parser("survey", help="compare closed forms with the exact solver")
    p.add_argument("--families", default=",".join(SURVEY_FAMILIES))
    p.add_argument("--max-size", type=_positive, default=7)
    p.add_argument("--min-size", type=_positive)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
