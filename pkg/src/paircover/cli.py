"""Command-line front end.

Exit codes: 0 success, 1 bad arguments, 2 unsupported shape, 3 verification
failure, 4 oracle stopped by a limit before proving optimality.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, constructions, designs, oracle, specialty
from .core import Assignment, InvalidAssignmentError, InvalidInstanceError, UnsupportedShapeError, render_grid, verify

EXIT_OK, EXIT_ARGS, EXIT_SHAPE, EXIT_VERIFY, EXIT_LIMIT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


def _emit_assignment(a: Assignment, fmt: str) -> str:
    if fmt == "json":
        return a.to_json() + "\n"
    if fmt == "csv":
        return a.to_csv()
    return render_grid(a)


def cmd_bounds(args) -> int:
    rep = bounds.lower_bound_strengthened(args.n, args.k)
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(rep.summary())
    return EXIT_OK


def cmd_assign(args) -> int:
    method = args.method
    if method == "auto" and args.no_greedy:
        a = constructions.assign_auto(args.n, args.k, allow_greedy=False)
    else:
        a = constructions.build(method, args.n, args.k)
    report = verify(a)
    if not report.complete:
        print(f"self-check failed: {report.summary()}", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(_emit_assignment(a, args.format))
    print(f"method={a.method} {report.summary().splitlines()[0]}", file=sys.stderr)
    if args.plot:
        from .plotting import plot_assignment

        plot_assignment(a, report, args.plot)
    return EXIT_OK


def _load_assignment(path: str, n: int | None, k: int | None) -> Assignment:
    text = Path(path).read_text()
    if path.lower().endswith(".csv"):
        if n is None:
            raise InvalidAssignmentError("CSV input needs --n (and optionally --k)")
        return Assignment.from_csv(text, n, k if k is not None else n)
    return Assignment.from_json(text)


def cmd_verify(args) -> int:
    a = _load_assignment(args.file, args.n, args.k)
    report = verify(a)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.summary())
    if args.plot:
        from .plotting import plot_assignment

        plot_assignment(a, report, args.plot)
    return EXIT_OK if report.complete else EXIT_VERIFY


def cmd_oracle(args) -> int:
    res = oracle.min_cover_exact(args.n, args.k, referee_limit=args.limit, node_limit=args.node_limit)
    if args.format == "json":
        doc = {
            "minimum": res.minimum,
            "exhausted": res.exhausted,
            "proven_lower": res.proven_lower,
            "witness": res.witness.to_dict(),
        }
        print(json.dumps(doc, indent=2))
        print(res.summary(), file=sys.stderr)
    else:
        print(res.summary())
        sys.stdout.write(render_grid(res.witness))
    return EXIT_OK if res.exhausted else EXIT_LIMIT


def cmd_systems(args) -> int:
    s = designs.triple_system() if args.arity == 3 else designs.quadruple_system()
    chk = designs.check_system(s)
    doc = s.to_dict()
    doc["valid"] = chk.ok
    if not chk.ok:
        doc["violation"] = {"reason": chk.reason, "tuples": [list(t) for t in chk.violation or ()]}
    print(json.dumps(doc, indent=2))
    return EXIT_OK if chk.ok else EXIT_VERIFY


def cmd_table1(args) -> int:
    sys.stdout.write(bounds.table1_csv() if args.format == "csv" else bounds.format_table1())
    return EXIT_OK


def cmd_table12(args) -> int:
    sys.stdout.write(bounds.table12_csv() if args.format == "csv" else bounds.format_table12())
    return EXIT_OK


def cmd_curve(args) -> int:
    sys.stdout.write(bounds.curve_csv(args.n))
    if args.plot:
        from .plotting import plot_bounds_curve

        plot_bounds_curve(args.n, args.plot, log=not args.linear)
    return EXIT_OK


def cmd_specialty(args) -> int:
    if args.two_areas:
        a, prof = specialty.assign_two_specialties(args.n)
    else:
        if args.k is None:
            raise InvalidInstanceError("--k is required unless --two-areas is given")
        a, prof = specialty.assign_block_specialties(args.n, args.k)
    report = verify(a)
    comp = specialty.check_specialty_compliance(a, prof)
    if args.format == "table":
        sys.stdout.write(render_grid(a))
        for r in a.referees:
            print(f"r{r.id}: {', '.join(prof.referee_areas[r.id])}")
    else:
        doc = {
            "assignment": a.to_dict(),
            "profile": prof.to_dict(),
            "compliant": comp.ok,
            "complete": report.complete,
        }
        print(json.dumps(doc, indent=2))
    if not comp.ok:
        sys.stderr.write(comp.to_csv())
    return EXIT_OK if (report.complete and comp.ok) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="paircover", description="Pair-covering referee assignments.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("bounds", help="lower bounds on the referee count")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("assign", help="build and self-verify an assignment")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=sorted(constructions.BUILDERS), default="auto")
    s.add_argument("--format", choices=["json", "csv", "table"], default="json")
    s.add_argument("--no-greedy", action="store_true", help="exit 2 instead of falling back to greedy")
    s.add_argument("--plot", metavar="PATH", help="also write an incidence/multiplicity figure")
    s.set_defaults(func=cmd_assign)

    s = sub.add_parser("verify", help="coverage report for an assignment file")
    s.add_argument("--file", required=True)
    s.add_argument("--n", type=int, help="proposal count (CSV input only)")
    s.add_argument("--k", type=int, help="capacity (CSV input only)")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--plot", metavar="PATH")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="exact minimum referee count for small n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--limit", type=int, help="largest referee count to try")
    s.add_argument("--node-limit", type=int, help="stop after this many search nodes")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("systems", help="dump an orthogonal tuple system")
    s.add_argument("--arity", type=int, choices=[3, 4], required=True)
    s.set_defaults(func=cmd_systems)

    for name, fn in (("table1", cmd_table1), ("table12", cmd_table12)):
        s = sub.add_parser(name, help=f"emit {name}")
        s.add_argument("--format", choices=["text", "csv"], default="text")
        s.set_defaults(func=fn)

    s = sub.add_parser("curve", help="real-valued lower/upper bound curve as CSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--plot", metavar="PATH", help="also render the curve to an image file")
    s.add_argument("--linear", action="store_true", help="linear y axis in the figure")
    s.set_defaults(func=cmd_curve)

    s = sub.add_parser("specialty", help="specialty-constrained assignment and profile")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--two-areas", action="store_true")
    s.add_argument("--format", choices=["json", "table"], default="json")
    s.set_defaults(func=cmd_specialty)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, grammar errors exit EXIT_ARGS
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UnsupportedShapeError as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except InvalidAssignmentError as exc:
        print(f"invalid assignment: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (InvalidInstanceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
