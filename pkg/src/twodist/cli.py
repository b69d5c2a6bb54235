"""Command line entry point.

Vertex arguments use 1-based labels (the numbering of the printed G_16
edge lists).  GRAPH is either a JSON graph document or a catalog name.

Exit codes: 0 success / verdict as requested, 1 failed check or invalid
input file, 2 usage error, 3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import catalog, io
from .exactnum import DEFAULT_PRECISION, Q5, Q33
from .geometry import HEXAGON
from .graphs import SpindledGraph, automorphism_report, build_edges, edge_audit, format_edge_list, spindle
from .render import write_svg
from .solver.coloring import (
    BACKENDS,
    UNKNOWN,
    ColoringQuery,
    Indeterminate,
    check_coloring,
    color_decide,
    color_enumerate,
    default_timeout,
    export_dimacs,
)
from .solver.reduce import POLICIES, NotForcing, reduce_preserving

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


def _catalog():
    def pts(builder, targets, label):
        return lambda: build_edges(builder(), *targets, label=label)

    return {
        "g5": pts(catalog.build_g5, catalog.PENT_TARGETS, "G5"),
        "g126": catalog.build_g126,
        "g16": catalog.build_g16,
        "g31": catalog.build_g31,
        "g31-alt": catalog.build_g31_alt,
        "g7": pts(catalog.build_g7, catalog.HEX_TARGETS, "G7"),
        "g19": pts(catalog.build_g19, catalog.HEX_TARGETS, "G19"),
        "g313": catalog.build_g313,
        "g199": catalog.build_g199,
        "g397": catalog.build_g397,
        "g397-alt": lambda: catalog.build_g397(variant="double"),
    }


CATALOG_NAMES = ("g5", "g126", "g16", "g31", "g31-alt", "g7", "g19", "g313", "g199", "g397", "g397-alt")


class CliError(Exception):
    def __init__(self, msg, code=EXIT_FAIL):
        super().__init__(msg)
        self.code = code


def load_any(spec: str):
    """Graph document path or catalog name -> TwoDistGraph | SpindledGraph."""
    if spec in CATALOG_NAMES and not Path(spec).exists():
        return _catalog()[spec]()
    try:
        return io.load(spec)
    except FileNotFoundError:
        raise CliError(f"no such graph file or catalog name: {spec}", EXIT_USAGE) from None
    except io.GraphFormatError as exc:
        raise CliError(f"{spec}: {exc}") from None


def _graph(obj):
    return obj.graph if isinstance(obj, SpindledGraph) else obj


def _vertex(G, label: int) -> int:
    if not 1 <= label <= G.n:
        raise CliError(f"vertex {label} out of range 1..{G.n}", EXIT_USAGE)
    return label - 1


def _pairs(G, pairs):
    return tuple((_vertex(G, a), _vertex(G, b)) for a, b in pairs or ())


def _timeout(args):
    return args.timeout if args.timeout is not None else default_timeout()


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_build(args):
    G = load_any(args.name)
    _emit(io.dumps(G, provenance=f"catalog:{args.name}"), args.out)
    print(f"{args.name}: {_graph(G).n} vertices", file=sys.stderr)
    return EXIT_OK


def cmd_edges(args):
    G = _graph(load_any(args.graph))
    print(f"vertices {G.n}  E1 {len(G.e1)}  E2 {len(G.e2)}")
    if args.list:
        print("E1 =", format_edge_list(G.e1))
        print("E2 =", format_edge_list(G.e2))
    if args.audit:
        rep = edge_audit(G, precision=args.precision)
        print(json.dumps(rep))
    return EXIT_OK


def _write_coloring(path, coloring):
    Path(path).write_text(json.dumps({"coloring": coloring}) + "\n", encoding="utf-8")


def cmd_solve(args):
    G = _graph(load_any(args.graph))
    diff = _pairs(G, args.diff)
    if args.force_pair:
        return _force_pair(G, *args.force_pair, args.k, _timeout(args))
    if args.enumerate:
        return _enumerate(G, args.k, canonical=True, limit=None, mono=None)
    q = ColoringQuery(G, args.k, diff, symmetry_breaking=not args.no_symmetry)
    if args.export_cnf:
        export_dimacs(q, args.export_cnf)
        print(f"wrote {args.export_cnf}")
        return EXIT_OK
    out = color_decide(q, timeout=_timeout(args))
    print(out.verdict)
    print(json.dumps({k: round(v, 4) if isinstance(v, float) else v for k, v in out.stats.items()}))
    if out.verdict == UNKNOWN:
        return EXIT_TIMEOUT
    if out.sat:
        print("coloring", " ".join(str(c) for c in out.coloring))
        if args.coloring_out:
            _write_coloring(args.coloring_out, out.coloring)
    if args.expect and args.expect.upper() != out.verdict:
        return EXIT_FAIL
    return EXIT_OK


def _force_pair(G, a, b, k, timeout):
    u, v = _vertex(G, a), _vertex(G, b)
    if G.edge_type(u, v):
        raise CliError(f"{a} and {b} are adjacent", EXIT_USAGE)
    out = color_decide(ColoringQuery(G, k, ((u, v),)), timeout=timeout)
    if out.verdict == UNKNOWN:
        print("indeterminate")
        return EXIT_TIMEOUT
    if out.sat:
        print(f"not forced: {a} and {b} can differ")
        print("coloring", " ".join(str(c) for c in out.coloring))
        return EXIT_FAIL
    print(f"forced: {a} and {b} share a colour in every {k}-colouring")
    return EXIT_OK


def cmd_force_pair(args):
    G = _graph(load_any(args.graph))
    return _force_pair(G, args.u, args.v, args.k, _timeout(args))


def _enumerate(G, k, canonical, limit, mono):
    count = 0
    mono_ok = True
    for col in color_enumerate(G, k, canonicalize=canonical):
        if not check_coloring(G, col, k):
            raise AssertionError("enumerated colouring is not proper")
        count += 1
        if mono is not None and col[mono[0]] != col[mono[1]]:
            mono_ok = False
        if limit is None or count <= limit:
            print(" ".join(str(c) for c in col))
    print(f"count {count}")
    if mono is not None:
        print("mono pair holds in every colouring" if mono_ok else "mono pair violated")
        return EXIT_OK if mono_ok else EXIT_FAIL
    return EXIT_OK


def cmd_enumerate(args):
    G = _graph(load_any(args.graph))
    try:
        mono = _pairs(G, [args.check_mono])[0] if args.check_mono else None
        return _enumerate(G, args.k, not args.all, args.limit, mono)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None


def cmd_reduce(args):
    G = _graph(load_any(args.graph))
    u, v = _vertex(G, args.u), _vertex(G, args.v)
    try:
        res = reduce_preserving(
            G, u, v, args.k, order_policy=args.policy, seed=args.seed,
            use_cores=not args.no_cores, timeout=_timeout(args),
        )
    except NotForcing as exc:
        raise CliError(str(exc)) from None
    H = res.graph
    print(
        f"kept {H.n} of {G.n} vertices  E1 {len(H.e1)}  E2 {len(H.e2)}  "
        f"pair {res.pair[0] + 1},{res.pair[1] + 1}  checks {res.checks}  {res.runtime:.1f}s",
        file=sys.stderr,
    )
    if res.undecided:
        print(f"warning: {len(res.undecided)} deletions undecided within budget", file=sys.stderr)
    _emit(io.dumps(H, provenance=f"reduce:{args.graph}:{args.policy}:{args.seed}"), args.out)
    return EXIT_OK


def cmd_spindle(args):
    G = _graph(load_any(args.graph))
    scalar = Q33 if G.family == HEXAGON else Q5
    forbidden = G.t1 if args.forbidden == 1 else G.t2
    if not isinstance(forbidden, scalar):
        raise CliError("unexpected target type")
    S = spindle(G, _vertex(G, args.pivot), _vertex(G, args.target), forbidden, precision=args.precision)
    print(f"{S.n} vertices  E1 {len(S.graph.e1)}  E2 {len(S.graph.e2)}  cos {S.cos_angle}", file=sys.stderr)
    _emit(io.dumps(S, provenance=f"spindle:{args.graph}"), args.out)
    return EXIT_OK


def cmd_automorphisms(args):
    G = _graph(load_any(args.graph))
    rep = automorphism_report(G)
    print(json.dumps({
        "color_preserving": rep.order_color_preserving,
        "color_permuting": rep.order_color_permuting,
        "uncolored": rep.order_uncolored,
    }))
    return EXIT_OK


def cmd_export_cnf(args):
    G = _graph(load_any(args.graph))
    diff = _pairs(G, args.diff)
    text = export_dimacs(ColoringQuery(G, args.k, diff))
    _emit(text, args.out)
    return EXIT_OK


def cmd_render(args):
    G = _graph(load_any(args.graph))
    coloring = None
    if args.coloring:
        data = json.loads(Path(args.coloring).read_text(encoding="utf-8"))
        coloring = data["coloring"] if isinstance(data, dict) else data
    mono = [_vertex(G, x) for x in args.mono or ()]
    write_svg(G, args.out, coloring=coloring, mono=mono)
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify_paper(args):
    from .verify import run_battery

    report = run_battery(include_slow=args.include_slow, timeout=_timeout(args))
    if args.json:
        print(json.dumps(report.as_dict(), indent=1, default=str))
    else:
        print(report.format())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="interval bits (default 128)")
    common.add_argument(
        "--timeout", type=float, default=None,
        help="solver budget in seconds (default: $TWODIST_TIMEOUT, else unlimited)",
    )
    common.add_argument("--backend", choices=BACKENDS, help="CDCL kernel (default: $TWODIST_BACKEND, else fast)")
    p = argparse.ArgumentParser(prog="twodist", description="Exact two-distance graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser(parents=[common], name="build", help="build a catalog graph and write its JSON document")
    s.add_argument("name", choices=CATALOG_NAMES)
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser(parents=[common], name="edges", help="edge counts, lists and audit")
    s.add_argument("graph")
    s.add_argument("--list", action="store_true", help="print E1/E2 with 1-based labels")
    s.add_argument("--audit", action="store_true", help="certify all non-edges with intervals")
    s.set_defaults(func=cmd_edges)

    s = sub.add_parser(parents=[common], name="solve", help="decide k-colourability")
    s.add_argument("graph")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--diff", nargs=2, type=int, action="append", metavar=("U", "V"))
    s.add_argument("--force-pair", nargs=2, type=int, metavar=("U", "V"))
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--export-cnf", metavar="PATH")
    s.add_argument("--no-symmetry", action="store_true", help="do not pin a maximum clique")
    s.add_argument("--coloring-out", metavar="PATH")
    s.add_argument("--expect", choices=("sat", "unsat"))
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser(parents=[common], name="force-pair", help="is the pair monochromatic in every k-colouring?")
    s.add_argument("graph")
    s.add_argument("u", type=int)
    s.add_argument("v", type=int)
    s.add_argument("-k", type=int, default=5)
    s.set_defaults(func=cmd_force_pair)

    s = sub.add_parser(parents=[common], name="enumerate", help="list proper k-colourings (at most 40 vertices)")
    s.add_argument("graph")
    s.add_argument("-k", type=int, default=5)
    s.add_argument("--all", action="store_true", help="do not quotient by colour permutations")
    s.add_argument("--limit", type=int, default=20, help="colourings to print (count is always full)")
    s.add_argument("--check-mono", nargs=2, type=int, metavar=("U", "V"))
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser(parents=[common], name="reduce", help="greedy deletion keeping a pair forced")
    s.add_argument("graph")
    s.add_argument("u", type=int)
    s.add_argument("v", type=int)
    s.add_argument("-k", type=int, default=5)
    s.add_argument("--policy", choices=POLICIES, default="distance")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-cores", action="store_true")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser(parents=[common], name="spindle", help="two rotated copies about a pivot")
    s.add_argument("graph")
    s.add_argument("pivot", type=int)
    s.add_argument("target", type=int)
    s.add_argument("--forbidden", type=int, choices=(1, 2), default=1, help="which target distance")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_spindle)

    s = sub.add_parser(parents=[common], name="automorphisms", help="automorphism group orders")
    s.add_argument("graph")
    s.set_defaults(func=cmd_automorphisms)

    s = sub.add_parser(parents=[common], name="export-cnf", help="DIMACS CNF of a colouring query")
    s.add_argument("graph")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--diff", nargs=2, type=int, action="append", metavar=("U", "V"))
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_export_cnf)

    s = sub.add_parser(parents=[common], name="render", help="SVG drawing")
    s.add_argument("graph")
    s.add_argument("-o", "--out", required=True)
    s.add_argument("--coloring", help="JSON file with a colour list")
    s.add_argument("--mono", nargs="+", type=int, help="vertices to fill black")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser(parents=[common], name="verify-paper", help="run the verification battery")
    s.add_argument("--include-slow", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.backend:
        os.environ["TWODIST_BACKEND"] = args.backend
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except Indeterminate as exc:
        print(f"indeterminate: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
