"""Command-line entry point.

Single-shot commands print one JSON object on stdout; suite commands print
JSON lines.  Exit codes: 0 when every check holds, 1 on usage errors, 2 when
some check fails, 3 when the only deviations are inconclusive enclosures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds, repro
from .graphs import Graph, generate, parse_graph6, read_edge_list
from .hardcore import (
    independence_polynomial,
    occupancy_fraction,
    occupancy_value,
    variance_fraction,
    variance_value,
)
from .intervals import free_energy_interval
from .orderings import OrderingKind, compare
from .polynomials import Poly
from .sampler import estimate
from .verdict import FAILS, INCONCLUSIVE, format_rational

DEFAULT_TOL = Fraction(1, 10**9)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILS = 2
EXIT_INCONCLUSIVE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def resolve_graph(spec: str) -> Graph:
    """Generator spec, "g6:<graph6>", or "@<edge-list file>"."""
    if spec.startswith("g6:"):
        return parse_graph6(spec[3:])
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="ascii") as handle:
            return read_edge_list(handle.read()).with_label(spec)
    return generate(spec)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _default_tol() -> Fraction:
    env = os.environ.get("HARDCORE_LAB_TOL")
    if env:
        return Fraction(env)
    return DEFAULT_TOL


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _exit_code(statuses) -> int:
    statuses = set(statuses)
    if FAILS in statuses or "failed" in statuses:
        return EXIT_FAILS
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_poly(args) -> int:
    g = resolve_graph(args.graph)
    z = independence_polynomial(g)
    _emit({
        "graph": g.display_name(),
        "n": g.n,
        "edges": g.edge_count,
        "coefficients": z.to_text(),
    })
    return EXIT_OK


def cmd_quantities(args) -> int:
    g = resolve_graph(args.graph)
    lam = args.lam
    tol = args.tol if args.tol is not None else _default_tol()
    z = independence_polynomial(g)
    e = occupancy_fraction(g, z)
    v = variance_fraction(g, z)
    fe = free_energy_interval(z, g.n, lam, tol)
    _emit({
        "graph": g.display_name(),
        "lambda": format_rational(lam),
        "partition": z.to_text(),
        "partition_at_lambda": format_rational(Fraction(z.evaluate(lam))),
        "occupancy": {"num": e.num.to_text(), "den": e.den.to_text()},
        "occupancy_at_lambda": format_rational(occupancy_value(g, lam, z)),
        "variance": {"num": v.num.to_text(), "den": v.den.to_text()},
        "variance_at_lambda": format_rational(variance_value(g, lam, z)),
        "free_energy_enclosure": fe.to_json(),
    })
    return EXIT_OK


def cmd_order(args) -> int:
    try:
        kind = OrderingKind(args.kind.upper())
    except ValueError:
        print(f"error: unknown ordering kind {args.kind!r}", file=sys.stderr)
        return EXIT_USAGE
    p = Poly.from_text(args.p)
    q = Poly.from_text(args.q)
    verdict = compare(kind, p, q)
    out = {"kind": kind.value, "p": p.to_text(), "q": q.to_text()}
    out.update(verdict.to_json())
    _emit(out)
    return _exit_code([verdict.status])


BOUND_GROUPS = {
    "free_energy": lambda g, lam, tol: bounds.check_free_energy_bounds(g, lam),
    "occupancy": lambda g, lam, tol: bounds.check_occupancy_bounds(g, lam),
    "occupancy_tf": lambda g, lam, tol: [bounds.check_occupancy_tf(g, lam, tol)],
    "variance": lambda g, lam, tol: bounds.check_variance_bounds(g, lam),
    "combined": lambda g, lam, tol: bounds.check_combined_chain(g, lam, tol),
    "local_occupancy": lambda g, lam, tol: [
        bounds.check_local_occupancy(g, 1 + 1 / lam, 1, lam)],
    "weighted_marginals": lambda g, lam, tol: [
        bounds.check_weighted_marginal_sum(g, lam, "clique"),
    ],
    "weighted_marginals_tf": lambda g, lam, tol: [
        bounds.check_weighted_marginal_sum(g, lam, "triangle_free", tol),
    ],
    "vertex_ceiling": lambda g, lam, tol: [
        bounds.check_vertex_f_upper_counterexample(g, lam)],
}

GRAPHLESS_BOUNDS = {
    "p5_threshold": lambda lam, tol: bounds.check_p5_threshold(),
    "edge_counterexamples": lambda lam, tol: bounds.check_edge_occ_counterexamples(
        lam if lam is not None else 5),
}


def cmd_bound(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    if args.name in GRAPHLESS_BOUNDS:
        checks = GRAPHLESS_BOUNDS[args.name](args.lam, tol)
    elif args.name in BOUND_GROUPS:
        if args.graph is None or args.lam is None:
            print("error: this bound needs a graph and --lambda", file=sys.stderr)
            return EXIT_USAGE
        g = resolve_graph(args.graph)
        checks = BOUND_GROUPS[args.name](g, args.lam, tol)
    else:
        known = ", ".join(sorted(BOUND_GROUPS) + sorted(GRAPHLESS_BOUNDS))
        print(f"error: unknown bound {args.name!r} (known: {known})", file=sys.stderr)
        return EXIT_USAGE
    for check in checks:
        _emit(check.to_json())
    return _exit_code(c.status for c in checks)


def cmd_sample(args) -> int:
    g = resolve_graph(args.graph)
    report = estimate(g, args.lam, args.steps, args.burn_in, seed=args.seed)
    _emit(report.to_json())
    return EXIT_OK


def cmd_repro(args) -> int:
    try:
        items = repro.run(args.ids or None)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    lines = [json.dumps(item.to_json(), sort_keys=True) for item in items]
    text = "\n".join(lines) + "\n"
    if args.out:
        tmp = args.out + ".tmp"
        with open(tmp, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, args.out)
    else:
        sys.stdout.write(text)
    return _exit_code(item.status for item in items)


def build_parser() -> _Parser:
    parser = _Parser(prog="hardcore-lab",
                     description="Exact hard-core model laboratory for small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="independence polynomial of a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("quantities",
                       help="partition function, occupancy and variance data")
    p.add_argument("graph")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--tol", type=_rational, default=None)
    p.set_defaults(func=cmd_quantities)

    p = sub.add_parser("order", help="decide one of the seven polynomial orderings")
    p.add_argument("kind", help="COUNT|PART|COEF|OCC|MAX|FV|VAR")
    p.add_argument("p", help="comma-separated coefficients, low degree first")
    p.add_argument("q")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("bound", help="run a named bound check")
    p.add_argument("name")
    p.add_argument("graph", nargs="?")
    p.add_argument("--lambda", dest="lam", type=_rational, default=None)
    p.add_argument("--tol", type=_rational, default=None)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sample", help="Glauber-dynamics estimate of nE and nV")
    p.add_argument("graph")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--steps", type=int, default=10**6)
    p.add_argument("--burn-in", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("repro", help="reproduce the verification suite")
    p.add_argument("ids", nargs="*", help="item ids, or 'all' (default)")
    p.add_argument("--out", default=None, help="write JSON lines to a file")
    p.set_defaults(func=cmd_repro)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
