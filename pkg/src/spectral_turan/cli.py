"""Command-line front end.

Exit status: 0 when every assertion held, 1 when a mathematical violation was
found, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from typing import Iterable, Optional

from . import bounds, verifier
from .cliques import edge_clique_orders
from .graph import (
    Graph,
    Graph6Error,
    PartitionSpec,
    complete_multipartite,
    from_graph6,
    gregory_gadget,
    kite,
    star,
    to_graph6,
    turan_graph,
    turan_minus,
)
from .lagrangian import maximize_lagrangian, maximize_weighted, verify_equality_support
from .spectral import DEFAULT_ITER_CAP, DEFAULT_TOL


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _table(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        cols = list(rows[0])
        writer.writerow(cols)
        for row in rows:
            writer.writerow([_fmt(row.get(c)) for c in cols])
    return buf.getvalue()


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "numerator") and not isinstance(value, (int, float)):
        return str(value)
    return value


def _read_g6_lines(path: str) -> Iterable[tuple[int, str]]:
    stream = sys.stdin if path == "-" else open(path, encoding="ascii")
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if line and not line.startswith("#"):
                yield lineno, line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _parse_g6(code: str, where: str) -> Graph:
    try:
        return from_graph6(code)
    except Graph6Error as exc:
        raise UsageError(f"{where}: {exc}") from exc


def _input_graphs(args) -> list[Graph]:
    graphs: list[Graph] = []
    for code in args.g6 or []:
        graphs.append(_parse_g6(code, f"--g6 {code!r}"))
    if args.g6_file:
        for lineno, code in _read_g6_lines(args.g6_file):
            graphs.append(_parse_g6(code, f"{args.g6_file}:{lineno}"))
    try:
        if getattr(args, "kite", None):
            graphs.append(kite(*args.kite))
        if getattr(args, "turan", None):
            graphs.append(turan_graph(*args.turan))
        if getattr(args, "turan_minus", None):
            graphs.append(turan_minus(*args.turan_minus))
        if getattr(args, "gregory", None):
            graphs.append(gregory_gadget(*args.gregory))
        if getattr(args, "star", None):
            graphs.append(star(args.star))
        if getattr(args, "multipartite", None):
            sizes = [int(p) for p in args.multipartite.split(",")]
            graphs.append(complete_multipartite(PartitionSpec.of(sizes)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return graphs


def _range(text: str) -> range:
    try:
        lo, hi = (int(p) for p in text.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from exc
    return range(lo, hi + 1)


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


# subcommands -----------------------------------------------------------------


def _ledger_task(item):
    code, tol, iter_cap = item
    return bounds.bound_ledger(from_graph6(code), tol, iter_cap)


def cmd_bounds(args) -> int:
    graphs = _input_graphs(args)
    if not graphs:
        raise UsageError("no input graphs; use --g6, --g6-file or a constructor flag")
    items = [(to_graph6(g), args.tol, args.iter_cap) for g in graphs]
    ledgers = verifier.parallel_map(_ledger_task, items, args.jobs)
    if args.output == "json":
        sys.stdout.write(bounds.ledgers_to_json(ledgers) + "\n")
    else:
        sys.stdout.write(bounds.ledgers_to_csv(ledgers))
    return 1 if any(l.violations() for l in ledgers) else 0


def cmd_verify(args) -> int:
    suites = verifier.SUITE_NAMES if args.suite == "all" else (args.suite,)
    graphs = None
    if args.g6_file:
        graphs = [code for lineno, code in _read_g6_lines(args.g6_file) if _parse_g6(code, f"{args.g6_file}:{lineno}")]
    elif args.n is None:
        raise UsageError("verify needs --n or --g6-file")
    elif args.n > verifier.ENUMERATION_LIMIT:
        raise UsageError(f"internal enumeration stops at n = {verifier.ENUMERATION_LIMIT}; pipe graph6 via --g6-file")
    summaries = [verifier.run_suite(s, args.n if args.n is not None else -1, args.jobs, graphs) for s in suites]
    bad = sum(len(s["violations"]) for s in summaries)
    for s in summaries:
        s["equality_cases"] = len(s["equality_cases"])
    out = summaries[0] if len(summaries) == 1 else {"suites": summaries, "violations": bad}
    sys.stdout.write(json.dumps(out, indent=1) + "\n")
    return 1 if bad else 0


def _experiment_gregory(args):
    k = args.k
    n_values = args.n_range or range(2 * (k - 1), 61)
    records = verifier.gregory_scan(k, n_values, args.tol)
    rows = []
    for rec in records:
        row = asdict(rec)
        row["violations"] = "; ".join(rec.violations)
        rows.append(row)
    verdict = {
        "first_violating_n": verifier.first_violation(records),
        "assertion_failures": sum(bool(r.violations) for r in records),
    }
    return rows, verdict, verdict["assertion_failures"] == 0


def _experiment_gregory_gap(args):
    k_values = args.k_list or [args.k]
    n_values = args.n_range or range(50, 301, 50)
    rows = verifier.gregory_gap_grid(k_values, n_values)
    return rows, {"cells": len(rows)}, True


def _experiment_kite(args):
    m_values = args.m_list or [100, 1000, 10000, 100000]
    rows = verifier.kite_gap_scan(args.w, m_values)
    failed = [r["m"] for r in rows if r["identity"] is False]
    verdict = {"limit": verifier.kite_gap_limit(args.w), "identity_failures": failed}
    return rows, verdict, not failed


def _experiment_star(args):
    row = verifier.star_counterexample(args.n, args.r, args.tol)
    message = (
        f"conjecture 1 violated: {row['q']:.6g} > {row['bound']:.3f}"
        if row["violated"]
        else f"conjecture 1 holds here: {row['q']:.6g} <= {row['bound']:.3f}"
    )
    return [row], {"message": message, **row}, row["q_equals_n"] and row["violated"]


def _experiment_spexcc(args):
    res = verifier.spex_cc_search(args.n, args.r, args.tol)
    row = {
        "n": res.n,
        "r": res.r,
        "graph6": res.graph6,
        "lambda": res.lam,
        "candidates": res.candidates,
        "turan_minus_lambda": res.turan_minus_lambda,
        "equals_turan_minus": res.equals_turan_minus,
    }
    return [row], row, True


def _experiment_turan_claims(args):
    row = verifier.turan_minus_claims(args.n, args.r, args.tol)
    return [row], row, row["ok"]


EXPERIMENTS = {
    "gregory": _experiment_gregory,
    "gregory-gap": _experiment_gregory_gap,
    "kite": _experiment_kite,
    "star": _experiment_star,
    "spexcc": _experiment_spexcc,
    "turan-claims": _experiment_turan_claims,
}


def cmd_experiment(args) -> int:
    try:
        rows, verdict, ok = EXPERIMENTS[args.name](args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.output == "json":
        sys.stdout.write(json.dumps(_jsonable({"rows": rows, "verdict": verdict}), indent=1) + "\n")
    else:
        sys.stdout.write(_table(rows))
        sys.stderr.write(json.dumps(_jsonable(verdict)) + "\n")
    return 0 if ok else 1


def _parse_edge_list(text: str, where: str) -> Graph:
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise UsageError(f"{where}: empty edge list")
    try:
        n = int(lines[0])
        edges = [tuple(int(p) for p in ln.split()) for ln in lines[1:]]
        if any(len(e) != 2 for e in edges):
            raise ValueError("each edge line needs two vertex indices")
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise UsageError(f"{where}: {exc}") from exc


def cmd_convert(args) -> int:
    if args.edges:
        text = sys.stdin.read() if args.edges == "-" else open(args.edges, encoding="ascii").read()
        sys.stdout.write(to_graph6(_parse_edge_list(text, args.edges)) + "\n")
        return 0
    graphs = _input_graphs(args)
    if not graphs:
        raise UsageError("convert needs --edges, --g6 or --g6-file")
    blocks = []
    for g in graphs:
        blocks.append("\n".join([str(g.n)] + [f"{i} {j}" for i, j in g.edges()]))
    sys.stdout.write("\n\n".join(blocks) + "\n")
    return 0


def cmd_lagrangian(args) -> int:
    graphs = _input_graphs(args)
    if not graphs:
        raise UsageError("lagrangian needs an input graph")
    rows = []
    ok = True
    for g in graphs:
        profile = edge_clique_orders(g)
        if args.weighted:
            value, x = maximize_weighted(g, profile, tol=args.tol, iter_cap=min(args.iter_cap, 10**5))
            target = 1.0 if g.m else 0.0
        else:
            value, x = maximize_lagrangian(g, tol=args.tol, iter_cap=min(args.iter_cap, 10**5))
            target = 1.0 - 1.0 / max(profile.omega, 1)
        passes = verify_equality_support(g, x, profile)
        ok = ok and abs(value - target) <= 1e-6 and passes
        rows.append({
            "graph6": to_graph6(g),
            "omega": profile.omega,
            "value": value,
            "target": target,
            "support": " ".join(map(str, x.support)),
            "weights": " ".join(f"{x.entries[i]:.12g}" for i in x.support),
            "equality_support": passes,
        })
    if args.output == "json":
        sys.stdout.write(json.dumps(rows, indent=1) + "\n")
    else:
        sys.stdout.write(_table(rows))
    return 0 if ok else 1


# parser ----------------------------------------------------------------------


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="eigensolver residual tolerance")
    common.add_argument("--iter-cap", type=_positive_int, default=DEFAULT_ITER_CAP)
    common.add_argument("--jobs", type=_positive_int, default=verifier.default_jobs(), help="worker processes")
    common.add_argument("--output", choices=("csv", "json"), default="csv")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--g6", action="append", help="graph6 string (repeatable)")
    inputs.add_argument("--g6-file", help="file of graph6 lines, '-' for stdin")

    constructors = argparse.ArgumentParser(add_help=False)
    constructors.add_argument("--kite", nargs=2, type=int, metavar=("M", "W"))
    constructors.add_argument("--turan", nargs=2, type=int, metavar=("N", "R"))
    constructors.add_argument("--turan-minus", nargs=2, type=int, metavar=("N", "R"))
    constructors.add_argument("--gregory", nargs=2, type=int, metavar=("N", "K"))
    constructors.add_argument("--star", type=int, metavar="N")
    constructors.add_argument("--multipartite", metavar="A,B,C")

    parser = argparse.ArgumentParser(prog="spectral-turan", description="Spectral Turán bounds and experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common, inputs, constructors], help="bound ledger per graph")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    p.add_argument("--n", type=int)
    p.add_argument("--suite", choices=verifier.SUITE_NAMES + ("all",), default="local-theorem")
    p.add_argument("--g6-file", help="verify these graphs instead of enumerating")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", parents=[common], help="numerical experiments")
    p.add_argument("name", choices=sorted(EXPERIMENTS))
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--k-list", type=_int_list)
    p.add_argument("--w", type=int, default=4)
    p.add_argument("--m-list", type=_int_list)
    p.add_argument("--n-range", type=_range, metavar="LO:HI")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("convert", parents=[common, inputs, constructors], help="graph6 <-> edge list")
    p.add_argument("--edges", help="edge-list file ('n' then 'u v' lines), '-' for stdin")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("lagrangian", parents=[common, inputs, constructors], help="one-shot simplex optimiser")
    p.add_argument("--weighted", action="store_true", help="clique-order weights instead of plain adjacency")
    p.set_defaults(func=cmd_lagrangian)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
