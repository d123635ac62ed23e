"""Command line entry point.

Diagram arguments accept ``torus:P,Q``, ``braid:LETTERS`` (signed integers,
``1`` = b_1 = sigma_1^-1, ``-1`` = sigma_1; optionally ``braid:STRANDS:LETTERS``),
``unknot``, or a path to a diagram JSON file ``{"pd": [...], "signs": [...]}``.

Exit codes: 0 ok, 2 usage, 3 validation, 4 verification failed, 5 search
limits exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .braid import BraidWord, closure, torus_diagram
from .diagram import Diagram, canonical_form, diagram_from_json, diagram_to_json
from .errors import KnotError, LimitsExceeded, ValidationError, VerificationError
from .invariants import (
    cowrithe,
    cowrithe_closed_form,
    interleaving_matrix,
    move_lower_bounds,
    writhe,
)
from .moves import kinds_from_families
from .render import chord_ascii, chord_svg
from .search import SearchLimits, bfs_min_moves
from .torus_deform import MoveTrace, deform_sequence, predicted_move_count, verify_trace

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_VERIFY, EXIT_LIMITS = 0, 2, 3, 4, 5


def load_diagram(arg: str) -> Diagram:
    if arg == "unknot":
        return Diagram.unknot()
    if arg.startswith("torus:"):
        try:
            p, q = (int(v) for v in arg[len("torus:"):].split(","))
        except ValueError:
            raise ValidationError(f"bad torus argument {arg!r}; expected torus:P,Q")
        return torus_diagram(p, q)
    if arg.startswith("braid:"):
        body = arg[len("braid:"):]
        strands = None
        if ":" in body:
            head, body = body.split(":", 1)
            strands = int(head)
        try:
            return closure(BraidWord.parse(body, strands))
        except ValueError:
            raise ValidationError(f"bad braid argument {arg!r}")
    path = Path(arg)
    if not path.exists():
        raise ValidationError(f"no such diagram file or argument: {arg!r}")
    try:
        return diagram_from_json(json.loads(path.read_text()))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{arg}: invalid JSON ({exc})")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen_torus(args) -> int:
    d = torus_diagram(args.p, args.q)
    _emit(json.dumps(diagram_to_json(d)) + "\n", args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = load_diagram(args.diagram)
    print(f"crossings {d.num_crossings}")
    print(f"writhe {writhe(d)}")
    print(f"cowrithe {cowrithe(d)}")
    print(f"canonical {canonical_form(d).code}")
    order, mat = interleaving_matrix(d)
    print("interleaving " + " ".join(str(c) for c in order))
    for c, row in zip(order, mat):
        print(f"  {c}: " + " ".join(f"{v:+d}" if v else " 0" for v in row))
    return EXIT_OK


def cmd_deform(args) -> int:
    trace = deform_sequence(args.n)
    report = verify_trace(trace)
    _emit(trace.dumps(), args.out)
    print(
        f"n={args.n} steps={len(trace)} riii={report.riii_count} ri={report.ri_count} "
        f"positive={report.positive}",
        file=sys.stderr if not args.out else sys.stdout,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    trace = MoveTrace.from_json(Path(args.trace).read_text())
    report = verify_trace(trace)
    print(
        f"ok steps={report.total} riii={report.riii_count} rii={report.rii_count} "
        f"ri={report.ri_count} positive={report.positive} "
        f"cowrithe={report.cowrithe_path[0]}->{report.cowrithe_path[-1]} "
        f"writhe={report.writhe_path[0]}->{report.writhe_path[-1]}"
    )
    if trace.n is not None:
        riii, ri = predicted_move_count(trace.n)
        agree = (report.riii_count, report.ri_count, report.rii_count) == (riii, ri, 0)
        print(f"predicted riii={riii} ri={ri} {'match' if agree else 'differ'}")
    return EXIT_OK


def cmd_search(args) -> int:
    start, target = load_diagram(args.start), load_diagram(args.target)
    limits = SearchLimits(args.max_crossings, args.max_depth, args.max_states,
                          kinds_from_families(args.moves))
    result = bfs_min_moves(start, target, limits, prune=args.prune)
    print(f"{result.outcome} explored={result.explored_states} frontier_peak={result.frontier_peak}")
    if result.found:
        print(f"length {result.length}: " + " ".join(str(s.move) for s in result.trace.steps))
        if args.emit_trace:
            Path(args.emit_trace).write_text(result.trace.dumps())
    return EXIT_OK


def cmd_chord(args) -> int:
    d = load_diagram(args.diagram)
    _emit(chord_svg(d) if args.format == "svg" else chord_ascii(d), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    b = move_lower_bounds(load_diagram(args.first), load_diagram(args.second))
    print(f"ri {b.ri_lower}")
    print(f"rii_riii {b.rii_riii_lower}")
    return EXIT_OK


def table_row(n: int) -> tuple[int, list, bool]:
    over, under = torus_diagram(n + 1, n), torus_diagram(n, n + 1)
    formula = [
        cowrithe_closed_form(n, "over"), cowrithe_closed_form(n, "under"),
        n * n, n * n - 1, *predicted_move_count(n),
    ]
    bounds = move_lower_bounds(over, under)
    computed = [
        cowrithe(over), cowrithe(under), writhe(over), writhe(under),
        bounds.rii_riii_lower, bounds.ri_lower,
    ]
    return n, formula, formula == computed


def cmd_table(args) -> int:
    ns = range(2, args.n_max + 1)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(table_row, ns))
    else:
        rows = [table_row(n) for n in ns]
    print("n x(D(n+1,n)) x(D(n,n+1)) w(D(n+1,n)) w(D(n,n+1)) moves check")
    bad = False
    for n, (xo, xu, wo, wu, riii, ri), ok in rows:
        bad |= not ok
        print(f"{n} {xo} {xu} {wo} {wu} {riii}+{ri} {'ok' if ok else 'MISMATCH'}")
    return EXIT_VERIFY if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusmoves",
        description="Knot diagrams, cowrithe and Reidemeister move sequences between torus diagrams.",
        epilog="Braid notation: signed integers, e.g. '1 2 1 2' for b1 b2 b1 b2 and '-1' "
               "for b1^-1 = sigma_1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-torus", help="emit D(p,q) as diagram JSON")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_torus)

    p = sub.add_parser("invariants", help="writhe, cowrithe and interleaving matrix")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("deform", help="write the D(n+1,n) -> D(n,n+1) move trace")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("verify", help="replay and certify a move trace")
    p.add_argument("trace")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="bounded BFS for a shortest move sequence")
    p.add_argument("start")
    p.add_argument("target")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--max-states", type=int, default=1_000_000)
    p.add_argument("--moves", default="R1,R2,R3")
    p.add_argument("--prune", action="store_true", help="writhe/cowrithe gap pruning")
    p.add_argument("--emit-trace")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chord", help="render the chord diagram")
    p.add_argument("diagram")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_chord)

    p = sub.add_parser("bounds", help="writhe and cowrithe move lower bounds")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="closed forms vs computed invariants for n=2..N")
    p.add_argument("n_max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        where = "" if exc.index is None else f" index={exc.index}"
        print(f"error: {exc.code}:{where} {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except LimitsExceeded as exc:
        print(f"error: {exc.code}: explored={exc.explored} {exc}", file=sys.stderr)
        return EXIT_LIMITS
    except ValidationError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except KnotError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: IOError: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
