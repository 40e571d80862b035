"""Command line front end.

Subcommands map one-to-one onto the library layers: construct/verify
for the coloring, scan for the four-cycle census, solve for single
quadruple queries, validate-elimination for the algebra behind the
solver, ramsey for bipartite repeat counting, bounds for the exponent
calculator.  Reports are deterministic (sorted keys, fixed iteration
orders), so identical invocations produce byte-identical output.

Exit status: 0 when every certification in the run passed, 1 when a
certified property failed (the report carries the counterexample), 2
for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import coloring as coloring_mod
from . import ramsey as ramsey_mod
from .field import PrimeField, find_prime
from .polynomial import verify_elimination_identities
from .scanner import DEFAULT_SCAN_LIMIT, group_and_check
from .solver import (
    CoefficientCollapseError,
    CycleSolver,
    InvalidQuadrupleError,
    RepeatBoundViolation,
)


def _json_only(args) -> None:
    if args.format == "csv":
        raise ValueError("csv output is only available for construct and scan")


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _coloring_for(args) -> coloring_mod.EdgeColoring:
    if args.prime is not None:
        field = PrimeField(args.prime)
    elif args.prime_min is not None:
        field = find_prime(args.prime_min)
    else:
        raise ValueError("need --prime or --prime-min")
    return coloring_mod.build_coloring(field)


def _cmd_construct(args) -> int:
    coloring = _coloring_for(args)
    if args.format == "csv":
        _emit(coloring_mod.coloring_to_csv(coloring), args.out)
    else:
        _emit(coloring_mod.coloring_to_json(coloring), args.out)
    return 0


def _cmd_verify(args) -> int:
    _json_only(args)
    coloring = _coloring_for(args)
    report = coloring_mod.verify_proper(coloring)
    summary = coloring_mod.census(coloring)
    payload = {
        "p": report.p,
        "a_max": report.a_max,
        "n_edges": report.n_edges,
        "proper": report.proper,
        "conflicts": [list(c) for c in report.conflicts],
        "colors_nonzero": report.colors_nonzero,
        "triple_sums_below_p": report.triple_sums_below_p,
        "distinct_colors": summary.distinct_colors,
        "max_class_size": summary.max_class_size,
        "colors_per_vertex_ratio": summary.colors_per_vertex_ratio,
        "color_bound": report.p - 1,
        "within_color_bound": summary.distinct_colors <= report.p - 1,
        "pass": report.passed and summary.distinct_colors <= report.p - 1,
    }
    _emit(_dump(payload), args.out)
    return 0 if payload["pass"] else 1


def _cmd_scan(args) -> int:
    coloring = _coloring_for(args)
    print(
        "scanning p=%d (a_max=%d)" % (coloring.p, coloring.a_max),
        file=sys.stderr,
    )
    report = group_and_check(
        coloring, args.k, workers=args.workers, budget=args.budget
    )
    if args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(_dump(report.as_dict()), args.out)
    return 0 if report.passed else 1


def _cmd_solve(args) -> int:
    _json_only(args)
    coloring = _coloring_for(args)
    quadruple = tuple(args.quadruple)
    solver = CycleSolver(coloring.vertices)
    p = coloring.p
    branch = (
        "degenerate"
        if (quadruple[0] - quadruple[1] + quadruple[2] - quadruple[3]) % p == 0
        else "generic"
    )
    try:
        solutions = solver.solve(quadruple)
    except InvalidQuadrupleError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (RepeatBoundViolation, CoefficientCollapseError) as exc:
        _emit(
            _dump(
                {
                    "p": p,
                    "quadruple": list(quadruple),
                    "branch": branch,
                    "error": str(exc),
                    "pass": False,
                }
            ),
            args.out,
        )
        return 1
    payload = {
        "p": p,
        "quadruple": list(quadruple),
        "branch": branch,
        "solutions": [list(sol.as_tuple()) for sol in solutions],
    }
    _emit(_dump(payload), args.out)
    return 0


def _cmd_validate_elimination(args) -> int:
    _json_only(args)
    p = args.prime if args.prime is not None else find_prime(args.prime_min).p
    report = verify_elimination_identities(p, trials=args.budget)
    _emit(_dump(report.as_dict()), args.out)
    return 0 if report.passed else 1


def _read_bipartite(path: str) -> ramsey_mod.BipartiteColoring:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return ramsey_mod.coloring_from_json(text)
    return ramsey_mod.coloring_from_csv(text)


def _ramsey_pattern(args) -> ramsey_mod.PatternGraph:
    m = args.h1 if args.h1 is not None else 1
    l = args.h2 if args.h2 is not None else 1
    if args.h_edges is not None and args.h_edges != m * l:
        raise ValueError(
            "only complete bipartite patterns can be given by size; "
            "--h-edges must equal h1*h2 (= %d)" % (m * l)
        )
    return ramsey_mod.PatternGraph.complete(m, l)


def _cmd_ramsey(args) -> int:
    _json_only(args)
    coloring = _read_bipartite(args.coloring)
    counts = ramsey_mod.pair_count(coloring)
    payload = {"n": coloring.n, "counting": counts.as_dict()}
    status = 0
    if args.s is not None or args.t is not None:
        if args.s is None or args.t is None:
            raise ValueError("--s and --t go together")
        pattern = _ramsey_pattern(args)
        graph = ramsey_mod.build_auxiliary(coloring)
        search = ramsey_mod.find_pattern(graph, pattern)
        payload["pattern"] = {
            "h1": pattern.h1,
            "h2": pattern.h2,
            "edges": pattern.edge_count,
            "search": search.status,
        }
        if search.status == "found":
            certificate = ramsey_mod.certify_kst(
                search.embedding, coloring, args.s, args.t
            )
            payload["certificate"] = certificate.as_dict()
            if not certificate.passed:
                status = 1
    _emit(_dump(payload), args.out)
    return status


def _cmd_bounds(args) -> int:
    _json_only(args)
    required = {
        "--s": args.s,
        "--t": args.t,
        "--alpha": args.alpha,
        "--h1": args.h1,
        "--h2": args.h2,
        "--h-edges": args.h_edges,
    }
    missing = [flag for flag, value in required.items() if value is None]
    if missing:
        raise ValueError("missing %s" % ", ".join(missing))
    bound = ramsey_mod.bound_exponent(
        args.s, args.t, Fraction(args.alpha), args.h1, args.h2, args.h_edges
    )
    _emit(_dump(bound.as_dict()), args.out)
    return 0


_COMMANDS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "solve": _cmd_solve,
    "validate-elimination": _cmd_validate_elimination,
    "ramsey": _cmd_ramsey,
    "bounds": _cmd_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c4repeats",
        description="Colorings of complete graphs with few repeated "
        "four-cycles, and bipartite repeat counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, prime=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--out", help="write the report here instead of stdout")
        cmd.add_argument(
            "--format", choices=("json", "csv"), default="json",
            help="report format (csv only where a tabular form exists)",
        )
        if prime:
            group = cmd.add_mutually_exclusive_group(required=True)
            group.add_argument("--prime", type=int, help="modulus p = 5 (mod 6)")
            group.add_argument(
                "--prime-min", type=int,
                help="smallest usable prime at or above this bound",
            )
        return cmd

    add("construct", "emit the coloring as JSON or CSV", prime=True)
    add("verify", "check properness and color statistics", prime=True)

    scan = add("scan", "exhaustive disjoint-repeat scan", prime=True)
    scan.add_argument("--k", type=int, default=3, help="family size to exclude")
    scan.add_argument("--workers", type=int, default=1)
    scan.add_argument(
        "--budget", type=int, default=DEFAULT_SCAN_LIMIT,
        help="largest p the scan will accept",
    )

    solve = add("solve", "cycles carrying one ordered color quadruple", prime=True)
    solve.add_argument(
        "--quadruple", type=int, nargs=4, required=True,
        metavar=("A", "B", "C", "D"),
    )

    validate = add(
        "validate-elimination",
        "certify the elimination identities on random tuples",
        prime=True,
    )
    validate.add_argument(
        "--budget", type=int, default=10_000, help="number of random trials"
    )

    ramsey = add("ramsey", "pair-graph counting for a bipartite coloring")
    ramsey.add_argument("--coloring", required=True, help="CSV or JSON matrix")
    ramsey.add_argument("--s", type=int)
    ramsey.add_argument("--t", type=int)
    ramsey.add_argument("--h1", type=int)
    ramsey.add_argument("--h2", type=int)
    ramsey.add_argument("--h-edges", dest="h_edges", type=int)

    bounds = add("bounds", "q and exponent for the K_{s,t} color bound")
    bounds.add_argument("--s", type=int)
    bounds.add_argument("--t", type=int)
    bounds.add_argument("--alpha", help="rational Turan exponent, e.g. 3/2")
    bounds.add_argument("--h1", type=int)
    bounds.add_argument("--h2", type=int)
    bounds.add_argument("--h-edges", dest="h_edges", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = _COMMANDS[args.command]
    try:
        return handler(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except AssertionError as exc:
        print("certification failure: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
