"""Command-line front end: ``compute``, ``verify`` and ``bench``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 arithmetic overflow under ``--width``.

All numbers in JSON output are decimal strings so that no consumer ever
rounds them through a float.
"""

from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .chain import ChainSpec, ChainSpecError, build_graph, enumerate_chains, parse_spec, polyacene_spec
from .graph import Graph, format_edge_list, parse_edge_list
from .indices import from_hat, index_report, to_hat
from .oracle import edge_hosoya_bruteforce, hat_edge_hosoya_bruteforce
from .poly import CoefficientOverflow, Polynomial, eval_at_one, fixed_width
from .polyacene import edge_hosoya_closed
from .recurrence import chain_edge_hosoya

METHODS = ("oracle", "recurrence", "closed-form")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3

DEFAULT_VERIFY_CAP = 9
DEFAULT_BENCH_ORACLE_CAP = 60


class UsageError(Exception):
    pass


def verify_cap() -> int:
    return int(os.environ.get("EDGEHOSOYA_VERIFY_CAP", DEFAULT_VERIFY_CAP))


def compute_polynomial(spec: ChainSpec, method: str) -> Polynomial:
    if method == "oracle":
        return edge_hosoya_bruteforce(build_graph(spec))
    if method == "recurrence":
        return chain_edge_hosoya(spec)
    if method == "closed-form":
        if not spec.is_linear:
            raise UsageError(f"closed form only covers linear chains, got {spec}")
        return edge_hosoya_closed(spec.h)
    raise UsageError(f"unknown method {method!r}")


@dataclass
class Report:
    spec: str
    method: str
    polynomial: Polynomial
    timing_ms: float
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        idx = index_report(self.polynomial)
        return {
            "spec": self.spec,
            "method": self.method,
            "coefficients": [str(c) for c in self.polynomial.coeffs],
            "edge_count": str(idx.edge_count),
            "degree": str(idx.degree),
            "edge_wiener": str(idx.edge_wiener),
            "edge_hyper_wiener": str(idx.edge_hyper_wiener),
            "warnings": list(self.warnings),
            "timing_ms": f"{self.timing_ms:.3f}",
        }

    def to_json(self) -> str:
        return dumps_canonical(self.as_dict())

    def to_text(self) -> str:
        d = self.as_dict()
        lines = [
            f"spec: {d['spec']}",
            f"method: {d['method']}",
            f"H_e(x) = {self.polynomial}",
            f"edges: {d['edge_count']}",
            f"degree: {d['degree']}",
            f"edge-Wiener: {d['edge_wiener']}",
            f"edge-hyper-Wiener: {d['edge_hyper_wiener']}",
        ]
        lines += [f"warning: {w}" for w in d["warnings"]]
        lines.append(f"time: {d['timing_ms']} ms")
        return "\n".join(lines)


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_compute(spec_text: Optional[str], method: str = "recurrence",
                graph_file: Optional[str] = None,
                emit_graph: Optional[str] = None) -> Report:
    if graph_file is not None:
        if method != "oracle":
            raise UsageError("--graph input only works with --method oracle")
        with open(graph_file) as fh:
            g: Graph = parse_edge_list(fh.read())
        label, warnings = graph_file, []
        t0 = time.perf_counter()
        poly = edge_hosoya_bruteforce(g)
    else:
        if spec_text is None:
            raise UsageError("need a chain spec or --graph")
        spec = parse_spec(spec_text)
        g = build_graph(spec)
        label, warnings = str(spec), list(g.warnings)
        t0 = time.perf_counter()
        poly = compute_polynomial(spec, method)
    elapsed = (time.perf_counter() - t0) * 1e3
    if emit_graph is not None:
        with open(emit_graph, "w") as fh:
            fh.write(format_edge_list(g))
    return Report(label, method, poly, elapsed, warnings)


def check_chain(spec: ChainSpec,
                recurrence: Callable[[ChainSpec], Polynomial] = chain_edge_hosoya) -> list[str]:
    """Problems found for one chain; empty when every route agrees."""
    problems = []
    g = build_graph(spec)
    m = g.num_edges
    truth = edge_hosoya_bruteforce(g)
    rec = recurrence(spec)
    if rec != truth:
        problems.append(f"recurrence {rec} != oracle {truth}")
    if eval_at_one(truth) != m * (m + 1) // 2:
        problems.append("oracle pair count is not m(m+1)/2")
    hat = hat_edge_hosoya_bruteforce(g)
    if to_hat(truth, m) != hat:
        problems.append(f"to_hat {to_hat(truth, m)} != brute-force {hat}")
    if from_hat(hat, m) != truth:
        problems.append("from_hat does not invert to_hat")
    if spec.is_linear and edge_hosoya_closed(spec.h) != truth:
        problems.append("closed form disagrees with oracle")
    return problems


@dataclass
class VerifySummary:
    checked: int
    failures: list[tuple[str, list[str]]]


def _check_entry(args):
    spec, recurrence = args
    return str(spec), check_chain(spec, recurrence)


def cmd_verify(max_h: int = 7, jobs: int = 1,
               recurrence: Callable[[ChainSpec], Polynomial] = chain_edge_hosoya) -> VerifySummary:
    cap = verify_cap()
    if max_h < 1:
        raise UsageError("--max-h must be at least 1")
    if max_h > cap:
        raise UsageError(f"--max-h {max_h} exceeds cap {cap} (set EDGEHOSOYA_VERIFY_CAP)")
    specs = [s for h in range(1, max_h + 1) for s in enumerate_chains(h, cap=cap)]
    work = [(s, recurrence) for s in specs]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_check_entry, work, chunksize=16))
    else:
        results = [_check_entry(w) for w in work]
    order = {str(s): i for i, s in enumerate(specs)}
    results.sort(key=lambda r: order[r[0]])
    return VerifySummary(len(specs), [(s, p) for s, p in results if p])


def _digest(p: Polynomial) -> str:
    return hashlib.sha256(",".join(map(str, p.coeffs)).encode()).hexdigest()[:12]


def cmd_bench(hs: Sequence[int], methods: Sequence[str] = METHODS,
              oracle_cap: int = DEFAULT_BENCH_ORACLE_CAP) -> list[dict]:
    rows = []
    for h in hs:
        spec = polyacene_spec(h)
        for method in methods:
            if method == "oracle" and h > oracle_cap:
                rows.append({"h": h, "method": method, "skipped": True})
                continue
            t0 = time.perf_counter()
            p = compute_polynomial(spec, method)
            ms = (time.perf_counter() - t0) * 1e3
            rows.append({"h": h, "method": method, "skipped": False,
                         "ms": ms, "degree": p.degree, "digest": _digest(p)})
    return rows


def format_bench(rows: list[dict]) -> str:
    out = [f"{'h':>8}  {'method':<12} {'ms':>12}  {'degree':>8}  digest"]
    for r in rows:
        if r["skipped"]:
            out.append(f"{r['h']:>8}  {r['method']:<12} {'skipped':>12}")
        else:
            out.append(f"{r['h']:>8}  {r['method']:<12} {r['ms']:>12.3f}  "
                       f"{r['degree']:>8}  {r['digest']}")
    return "\n".join(out)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgehosoya",
        description="Edge-Hosoya polynomials and edge-Wiener indices of benzenoid chains.",
    )
    parser.add_argument(
        "--width", type=_positive_int, default=os.environ.get("EDGEHOSOYA_WIDTH"),
        help="emulate fixed-width integers of this many bits; overflow exits with code 3",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="polynomial and indices of one chain")
    p.add_argument("spec", nargs="?", help='chain spec "h[:turns]", e.g. 4:SS')
    p.add_argument("--method", choices=METHODS, default="recurrence")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--graph", metavar="PATH", help="edge-list file instead of a chain spec")
    p.add_argument("--emit-graph", metavar="PATH", help="write the graph as an edge list")

    p = sub.add_parser("verify", help="cross-check all routes on every chain up to --max-h")
    p.add_argument("--max-h", type=_positive_int, default=7)
    p.add_argument("--jobs", type=_positive_int, default=1)

    p = sub.add_parser("bench", help="time each method on polyacenes")
    p.add_argument("h", type=_positive_int, nargs="+")
    p.add_argument("--method", choices=METHODS, action="append",
                   help="restrict to a method (repeatable)")
    p.add_argument("--oracle-cap", type=_positive_int, default=DEFAULT_BENCH_ORACLE_CAP)
    return parser


def main(argv: Optional[Sequence[str]] = None, *,
         recurrence: Callable[[ChainSpec], Polynomial] = chain_edge_hosoya) -> int:
    """Entry point. ``recurrence`` lets harness tests inject a faulty route."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    width = int(args.width) if args.width is not None else None
    scope = fixed_width(width, width) if width else contextlib.nullcontext()
    try:
        with scope:
            if args.command == "compute":
                report = cmd_compute(args.spec, args.method, args.graph, args.emit_graph)
                print(report.to_json() if args.format == "json" else report.to_text())
                return EXIT_OK
            if args.command == "verify":
                summary = cmd_verify(args.max_h, args.jobs, recurrence)
                bad = len(summary.failures)
                print(f"checked {summary.checked} chains: "
                      f"{summary.checked - bad} passed, {bad} failed")
                for spec, problems in summary.failures:
                    for problem in problems:
                        print(f"FAIL {spec}: {problem}")
                return EXIT_MISMATCH if bad else EXIT_OK
            if args.command == "bench":
                rows = cmd_bench(args.h, args.method or METHODS, args.oracle_cap)
                print(format_bench(rows))
                return EXIT_OK
    except (ChainSpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoefficientOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE
