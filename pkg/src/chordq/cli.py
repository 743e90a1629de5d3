"""Command-line front end: ``chordq analyze | construct | verify``.

Exit codes: 0 when everything passes, 1 when a verification finds
violations, 2 for usage, parse, parameter and capacity errors.

Two environment variables provide defaults: ``CHORDQ_WORKERS`` (worker
processes for exhaustive checks) and ``CHORDQ_TOL`` (eigensolver tolerance).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Iterable, Iterator, Optional, Sequence

from . import __version__, harness, kernels
from .bounds import degree_average_bound, edge_degree_sum_bound
from .chorded import find_chorded_cycle
from .errors import ChordqError, PreconditionError
from .families import construct, parse_family
from .graph import Graph, classify_regularity, from_graph6, is_bipartite, is_connected, to_graph6
from .spectral import DEFAULT_TOL, a_radius, l_radius, q_radius

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

VERIFY_CHECKS = ("theorem-i", "theorem-ii", "corollary", "adjacency", "lemma-ab",
                 "suite", "chord-oracle", "chord-predicates", "chord-random")
DEFAULT_RANGES = {
    "theorem-i": (4, 7), "theorem-ii": (4, 7), "corollary": (4, 7),
    "adjacency": (6, 7), "lemma-ab": (5, 14),
    "chord-oracle": (1, 7), "chord-predicates": (4, 7),
}
EXHAUSTIVE = {"theorem-i", "theorem-ii", "corollary", "adjacency", "chord-oracle", "chord-predicates"}


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"7"`` or ``"4..7"`` to an inclusive pair."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad order range {text!r}; expected N or LO..HI") from None
    if lo > hi or lo < 1:
        raise UsageError(f"bad order range {text!r}")
    return lo, hi


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not a valid value") from None


def _resolve_tol(value: Optional[float]) -> float:
    tol = value if value is not None else _env_default("CHORDQ_TOL", float, DEFAULT_TOL)
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    return tol


def _resolve_workers(value: Optional[int]) -> int:
    workers = value if value is not None else _env_default("CHORDQ_WORKERS", int, 1)
    if workers < 1:
        raise UsageError("workers must be >= 1")
    return workers


# --- analyze ---------------------------------------------------------------

def _read_graph(text: str) -> tuple[Graph, Optional[str]]:
    """A graph6 string or a family spec (recognised by its ``:``)."""
    text = text.strip()
    if ":" in text and not text.startswith(">>graph6<<"):
        spec = parse_family(text)
        return construct(spec), text
    return from_graph6(text), None


def _inputs(args) -> Iterator[str]:
    if args.graph is not None and args.file is not None:
        raise UsageError("give either a graph argument or --file, not both")
    if args.graph is not None:
        yield args.graph
        return
    stream = open(args.file, encoding="ascii") if args.file else sys.stdin
    try:
        for line in stream:
            line = line.strip()
            if line:
                yield line
    finally:
        if args.file:
            stream.close()


def _bound_or_none(fn, g: Graph) -> Optional[dict]:
    try:
        return fn(g).to_dict()
    except PreconditionError:
        return None


def analyze_graph(g: Graph, tol: float = DEFAULT_TOL) -> dict:
    degs = g.degrees()
    cert = find_chorded_cycle(g)
    has_vertices = g.n > 0
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "edges": g.num_edges(),
        "degree_min": min(degs) if degs else 0,
        "degree_max": max(degs) if degs else 0,
        "degree_mean": sum(degs) / g.n if has_vertices else 0.0,
        "q": q_radius(g, tol) if has_vertices else None,
        "mu": l_radius(g, tol) if has_vertices else None,
        "rho": a_radius(g, tol) if has_vertices else None,
        "degree_average_bound": _bound_or_none(degree_average_bound, g),
        "edge_degree_sum_bound": _bound_or_none(edge_degree_sum_bound, g),
        "chorded_cycle": cert is not None,
        "certificate": cert.to_dict() if cert else None,
        "regularity": str(classify_regularity(g)),
        "bipartite": is_bipartite(g) is not None,
        "connected": is_connected(g),
        "tolerance": tol,
    }


def _analysis_text(d: dict) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items())
        elif isinstance(v, float):
            v = f"{v:.12g}"
        lines.append(f"{k:<22} {v}")
    return "\n".join(lines)


def cmd_analyze(args, out) -> int:
    tol = _resolve_tol(args.tol)
    for text in _inputs(args):
        g, family = _read_graph(text)
        d = analyze_graph(g, tol)
        if family is not None:
            d = {"family": family, **d}
        if args.format == "json":
            out.write(json.dumps(d, sort_keys=True) + "\n")
        else:
            out.write(_analysis_text(d) + "\n\n")
    return EXIT_OK


# --- construct -------------------------------------------------------------

def cmd_construct(args, out) -> int:
    spec = parse_family(args.family)
    g = construct(spec)
    if args.format == "json":
        d = {"family": args.family, "n": g.n, "graph6": to_graph6(g)}
        if args.edges:
            d["edges"] = [list(e) for e in g.edges()]
        out.write(json.dumps(d, sort_keys=True) + "\n")
    else:
        out.write(to_graph6(g) + "\n")
        if args.edges:
            for u, v in g.edges():
                out.write(f"{u} {v}\n")
    return EXIT_OK


# --- verify ----------------------------------------------------------------

def _orders(check: str, text: Optional[str], allow_n8: bool, chain_only: bool = False) -> list[int]:
    lo, hi = parse_range(text) if text else DEFAULT_RANGES[check]
    if check == "corollary" and chain_only:
        return list(range(lo, hi + 1))
    if check in EXHAUSTIVE:
        ceiling = harness.HARD_MAX_ORDER if allow_n8 else harness.DEFAULT_MAX_ORDER
        if hi > ceiling:
            hint = " (n = 8 needs --allow-n8)" if hi == harness.HARD_MAX_ORDER else ""
            raise UsageError(f"{check} supports n <= {ceiling}{hint}")
    return list(range(lo, hi + 1))


def _run_check(args, workers: int, tol: float) -> Iterable[harness.VerificationReport]:
    check = args.check
    if check == "suite":
        r = harness.run_property_suite(args.seed, args.trials, max_n=args.max_n, tol=tol)
        r.tolerance_used = tol
        yield r
        return
    if check == "chord-random":
        yield harness.check_chord_oracle_random(args.seed, args.trials, max_n=args.max_n)
        return
    fn = harness.CHECKS[check]
    for n in _orders(check, args.n, args.allow_n8, args.chain_only):
        if check == "lemma-ab":
            yield fn(n)
        elif check == "corollary":
            yield fn(n, workers=workers, allow_n8=args.allow_n8, clause_a=not args.chain_only)
        elif check in ("chord-oracle", "chord-predicates"):
            yield fn(n, workers=workers)
        else:
            yield fn(n, workers=workers, allow_n8=args.allow_n8)


def cmd_verify(args, out) -> int:
    workers = _resolve_workers(args.workers)
    tol = _resolve_tol(args.tol)
    print(f"chordq {__version__}: backend={kernels.BACKEND} workers={workers}", file=sys.stderr)
    if args.check in ("suite", "chord-random"):
        if args.n is not None:
            raise UsageError(f"{args.check} takes --max-n, not --n")
        if args.trials < 1:
            raise UsageError("trials must be >= 1")
    else:
        _orders(args.check, args.n, args.allow_n8, args.chain_only)  # fail fast before any work
    status = EXIT_OK
    for report in _run_check(args, workers, tol):
        if not report.passed:
            status = EXIT_VIOLATION
        if args.format == "json":
            out.write(report.to_json(include_timing=args.timing) + "\n")
        else:
            out.write(report.to_text() + "\n")
            if args.timing:
                out.write(f"  wall time         {report.wall_time:.3f}s ({report.backend})\n")
        out.flush()
    return status


# --- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordq", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"chordq {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tol", type=float, default=None,
                        help="eigensolver tolerance (default $CHORDQ_TOL or 1e-9)")
    common.add_argument("-v", "--verbose", action="store_true")

    a = sub.add_parser("analyze", parents=[common], help="spectral and structural summary of graphs")
    a.add_argument("graph", nargs="?", help="graph6 string or family spec; stdin lines if omitted")
    a.add_argument("--file", help="file of graph6 lines")

    c = sub.add_parser("construct", parents=[common], help="build a member of a named family")
    c.add_argument("family", help='e.g. "F:n=9,c=3", "Kb:2,7", "H:n=8,a1=0,a2=1,b1=1,b2=1"')
    c.add_argument("--edges", action="store_true", help="also print the edge list")

    v = sub.add_parser("verify", parents=[common], help="run an exhaustive or randomized check")
    v.add_argument("check", choices=VERIFY_CHECKS)
    v.add_argument("--n", help="order or inclusive range LO..HI")
    v.add_argument("--workers", type=int, default=None,
                   help="worker processes (default $CHORDQ_WORKERS or 1)")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--max-n", type=int, default=None, help="largest order for randomized checks")
    v.add_argument("--chain-only", action="store_true",
                   help="corollary: check the q(F_{n,c}) chain without the exhaustive clause")
    v.add_argument("--allow-n8", action="store_true", help="permit exhaustive n = 8 (hours)")
    v.add_argument("--timing", action="store_true", help="include wall time and backend")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if getattr(args, "max_n", 0) is None:
        args.max_n = 20 if args.check == "suite" else 12
    handlers = {"analyze": cmd_analyze, "construct": cmd_construct, "verify": cmd_verify}
    try:
        return handlers[args.command](args, sys.stdout)
    except (UsageError, ChordqError, ValueError, OSError) as e:
        print(f"chordq: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
