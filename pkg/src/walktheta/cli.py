"""Command-line front end: bound reports, theta estimates, verification suites, plot data."""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import bounds, reciprocal, spectral, theta, walkgen
from .graphs import (
    Graph,
    Graph6ParseError,
    NAMED_GRAPHS,
    adjacency,
    generate_named,
    parse_edge_list,
    parse_graph6,
)
from .independent_set import independence_number

ALPHA_ORACLE_LIMIT = 20


class InputError(Exception):
    """User-facing input problem; message already carries file:line context."""


def _read_graphs(args) -> list:
    if args.named:
        return [generate_named(args.named, n=args.n, k=args.k)]
    if not args.input:
        raise InputError("no input: give a file or --named NAME")
    path = args.input
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    text = raw.decode("ascii", errors="replace")
    fmt = args.format
    if fmt == "auto":
        first = text.lstrip().splitlines()[0].lstrip() if text.strip() else ""
        fmt = "edges" if first[:1].isdigit() else "g6"
    if fmt == "edges":
        try:
            return [parse_edge_list(text)]
        except ValueError as exc:
            raise InputError(f"{path}:1: {exc}") from exc
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line.strip()))
        except Graph6ParseError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from exc
    return graphs


def _emit(lines, args) -> None:
    out = sys.stdout
    if args.output:
        with open(args.output, "w") as fh:
            for line in lines:
                fh.write(line + "\n")
        return
    for line in lines:
        out.write(line + "\n")


def _map_jobs(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_bounds(args) -> int:
    graphs = _read_graphs(args)

    def one(g: Graph) -> dict:
        alpha = None
        if args.alpha_oracle and g.n <= ALPHA_ORACLE_LIMIT:
            alpha = independence_number(g)
        return bounds.report(g, known_alpha=alpha).to_json_dict()

    reports = _map_jobs(one, graphs, args.jobs)
    _emit([json.dumps(r) for r in reports], args)
    return 0 if all(r["dominance_ok"] for r in reports) else 1


def cmd_theta(args) -> int:
    graphs = _read_graphs(args)

    def one(g: Graph) -> dict:
        est = theta.minimize_theta(
            g,
            max_iter=args.max_iter,
            stall_tol=args.tol,
            alpha_oracle=args.alpha_oracle and g.n <= ALPHA_ORACLE_LIMIT,
        )
        return est.to_json_dict()

    _emit([json.dumps(r) for r in _map_jobs(one, graphs, args.jobs)], args)
    return 0


def _fixture_graphs() -> list:
    named = [
        ("K1", generate_named("empty", n=1)),
        ("empty3", generate_named("empty", n=3)),
        ("empty6", generate_named("empty", n=6)),
        ("K2", generate_named("complete", n=2)),
        ("K4", generate_named("complete", n=4)),
        ("K6", generate_named("complete", n=6)),
        ("C5", generate_named("cycle", n=5)),
        ("C7", generate_named("cycle", n=7)),
        ("P2", generate_named("path", n=2)),
        ("P5", generate_named("path", n=5)),
        ("P17", generate_named("path", n=17)),
        ("petersen", generate_named("petersen")),
        ("golomb", generate_named("golomb")),
        ("star4", parse_edge_list("5 0 4 1 4 2 4 3 4")),
    ]
    return named


def _random_graph(rng: np.random.Generator, n_max: int = 12) -> Graph:
    n = int(rng.integers(1, n_max + 1))
    p = float(rng.uniform(0.05, 0.9))
    edges = {
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    }
    g = Graph(n, frozenset(edges))
    if rng.random() < 0.3:
        g = g.add_isolated_vertex()
    return g


def _random_weighted(rng: np.random.Generator, n_min: int = 3, n_max: int = 10):
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        p = float(rng.uniform(0.2, 0.9))
        edges = sorted(
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        )
        if edges:
            break
    a = np.zeros((n, n))
    for i, j in edges:
        w = float(rng.uniform(0.2, 2.0)) * (1.0 if rng.random() < 0.5 else -1.0)
        a[i, j] = a[j, i] = w
    return a


def _suite_duality(count: int, seed: int, emit) -> int:
    rng = np.random.default_rng(seed)
    failures = 0
    for i in range(count):
        f = reciprocal.random_instance(rng)
        expect = reciprocal.has_critical_points(f)
        found = reciprocal.enumerate_critical_points(f)
        ok = expect == bool(found)
        if expect and found:
            ok = ok and reciprocal.verify_duality(f).duality_holds
        failures += not ok
        emit({"suite": "duality", "case": i, "ok": bool(ok)})
    return failures


def _suite_scaling(count: int, seed: int, emit) -> int:
    rng = np.random.default_rng(seed)
    failures = 0
    for i in range(count):
        a = _random_weighted(rng)
        _, scaled = theta.optimal_scaling(a)
        direct = walkgen.minimize_on_spectral_interval(a).value
        ok = abs(scaled - direct) <= 1e-6
        failures += not ok
        emit({"suite": "scaling", "case": i, "ok": bool(ok),
              "scaled": scaled, "direct": direct})
    return failures


def _suite_product(seed: int, emit) -> int:
    pairs = [
        ("C5", "C5"), ("K2", "K2"), ("empty3", "K2"), ("P5", "C5"),
        ("K4", "P2"), ("C7", "K2"), ("P5", "P5"), ("K2", "C5"),
        ("empty3", "empty6"), ("star4", "K2"),
    ]
    fixtures = dict(_fixture_graphs())
    failures = 0
    for i, (a, b) in enumerate(pairs):
        try:
            lhs, rhs, ok = theta.submultiplicativity_check(
                fixtures[a], fixtures[b], seed=seed + i
            )
        except AssertionError:
            lhs = rhs = math.nan
            ok = False
        failures += not ok
        emit({"suite": "product", "case": f"{a}x{b}", "ok": bool(ok),
              "lhs": lhs, "rhs": rhs})
    return failures


def _suite_dominance(graphs, count: int, seed: int, emit) -> int:
    if graphs is None:
        rng = np.random.default_rng(seed)
        graphs = [g for _, g in _fixture_graphs()]
        while len(graphs) < count:
            graphs.append(_random_graph(rng))
    failures = 0
    for i, g in enumerate(graphs):
        r = bounds.report(g)
        failures += not r.dominance_ok
        emit({"suite": "dominance", "case": i, "ok": bool(r.dominance_ok),
              "walkgen": r.walkgen_bound, "laplacian": r.laplacian_bound})
    return failures


def _suite_optimizer(count: int, seed: int, emit) -> int:
    rng = np.random.default_rng(seed)
    mats = [adjacency(g) for _, g in _fixture_graphs()]
    mats += [_random_weighted(rng) for _ in range(count)]
    failures = 0
    for i, a in enumerate(mats):
        cert = theta.extract_optimizer(a)
        norm_a = float(np.linalg.norm(a))
        scale = max(cert.norm_sq, 1e-30)
        ok = (
            cert.residual_orth <= theta.RESIDUAL_TOL * max(1.0, norm_a) * scale
            and cert.residual_sphere <= theta.RESIDUAL_TOL * scale
            and abs(cert.norm_sq - walkgen.minimize_on_spectral_interval(a).value) <= 1e-6
        )
        failures += not ok
        emit({"suite": "optimizer", "case": i, "ok": bool(ok)})
    return failures


def cmd_verify(args) -> int:
    lines = []
    emit = lambda obj: lines.append(json.dumps(obj))
    graphs = _read_graphs(args) if (args.input or args.named) else None
    suites = ["duality", "scaling", "product", "dominance", "optimizer"] \
        if args.suite == "all" else [args.suite]
    failures = 0
    for suite in suites:
        if suite == "duality":
            failures += _suite_duality(args.random, args.seed, emit)
        elif suite == "scaling":
            failures += _suite_scaling(min(args.random, 100), args.seed, emit)
        elif suite == "product":
            failures += _suite_product(args.seed, emit)
        elif suite == "dominance":
            failures += _suite_dominance(graphs, args.random, args.seed, emit)
        elif suite == "optimizer":
            failures += _suite_optimizer(min(args.random, 100), args.seed, emit)
    total = len(lines)
    emit({"passed": total - failures, "total": total, "ok": failures == 0})
    _emit(lines, args)
    return 0 if failures == 0 else 1


def cmd_plot(args) -> int:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise InputError("plot needs exactly one graph")
    g = graphs[0]
    a = adjacency(g)
    fn = walkgen.build(a)
    lines = []
    if g.edges:
        data = spectral.eig_sym(a)
        lo_mark, hi_mark = 1.0 / data.lam_min, 1.0 / data.lam_max
        lines.append("# lam_min_inv,%.12g" % lo_mark)
        lines.append("# lam_max_inv,%.12g" % hi_mark)
        lo = args.lo if args.lo is not None else 1.8 * lo_mark
        hi = args.hi if args.hi is not None else 1.8 * hi_mark
    else:
        lo = args.lo if args.lo is not None else -1.0
        hi = args.hi if args.hi is not None else 1.0
    lines.append("x,W")
    for x, value in walkgen.sample(fn, lo, hi, args.samples):
        if value is None:
            lines.append("%.12g," % x)
        else:
            lines.append("%.12g,%.12g" % (x, value))
    _emit(lines, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walktheta",
        description="Spectral theta bounds from walk-generating functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", help="graph6 lines or an edge-list file")
        p.add_argument("--named", choices=NAMED_GRAPHS, help="generate a named graph")
        p.add_argument("--n", type=int, help="order parameter for named families")
        p.add_argument("--k", type=int, help="subset size for kneser")
        p.add_argument("--format", choices=("auto", "g6", "edges"), default="auto")
        p.add_argument("--output", help="write to a file instead of stdout")

    p = sub.add_parser("bounds", help="per-graph bound reports as JSON lines")
    add_input(p)
    p.add_argument("--alpha-oracle", action="store_true",
                   help=f"attach exact independence number for n <= {ALPHA_ORACLE_LIMIT}")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("theta", help="per-graph theta estimates as JSON lines")
    add_input(p)
    p.add_argument("--tol", type=float, default=1e-6, help="stall tolerance")
    p.add_argument("--max-iter", type=int, default=5000)
    p.add_argument("--alpha-oracle", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("duality", "scaling", "product",
                                     "dominance", "optimizer", "all"))
    add_input(p)
    p.add_argument("--random", type=int, default=500,
                   help="number of random cases where applicable")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="CSV samples of the walk-generating function")
    add_input(p)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
