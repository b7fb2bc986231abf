"""Command-line front end: ``sak solve|verify|reduce|gen|snd|check-bounds``.

Exit codes: 0 yes/ok, 1 no/rejected, 2 usage, 3 input error. Reports are
JSON on stdout; only the ``timings`` field varies between identical runs.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .complete import ANTI_BALANCED, BALANCED, aso_anti_balanced, aso_balanced, classify_complete
from .domino import dp_solve, validate_domino
from .errors import (
    ClosedFormError,
    GraphError,
    InvalidCertificate,
    InvalidDecomposition,
    ParseError,
    SakError,
    StrategyUnavailable,
)
from .exact import (
    SolveResult,
    min_offensive_alliance_branching,
    min_offensive_alliance_bruteforce,
    min_offensive_alliance_unsigned,
    small_alliance_check,
)
from .graph import (
    SignedGraph,
    existence_precondition,
    is_offensive_alliance,
    iter_bits,
    size_lower_bound,
)
from .io import (
    format_hypergraph_text,
    format_signed_json,
    format_signed_text,
    format_unsigned_text,
    parse_decomposition,
    parse_hypergraph_text,
    parse_set,
    parse_signed,
    parse_unsigned_text,
)
from .reductions import (
    PER_VERTEX,
    SHARED,
    gen_complete,
    gen_hypergraph,
    gen_random_signed,
    gen_unsigned,
    min_hitting_set,
    min_vertex_cover,
    reduce_hitting_set,
    reduce_unsigned_oa,
    reduce_vertex_cover,
)
from .snd import snd_partition, solve_snd

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
STRATEGIES = ("auto", "brute", "branch", "closed", "ilp", "dp")


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _emit(obj: dict, out: str | None = None):
    text = json.dumps(obj, indent=1, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _labels(G: SignedGraph, S) -> list[str]:
    return [G.labels[v] for v in sorted(S)]


def _certificate(G: SignedGraph, cert) -> dict:
    return {
        "accepted": cert.accepted,
        "alliance": _labels(G, cert.alliance),
        "boundary": _labels(G, cert.boundary),
        "violations": [
            {"vertex": G.labels[v.vertex], "condition": v.condition, "profile": v.profile._asdict()}
            for v in cert.violations
        ],
    }


# -- solve ---------------------------------------------------------------------------
def _closed(G: SignedGraph) -> tuple[SolveResult, dict]:
    cls = classify_complete(G)
    if cls.kind == BALANCED:
        opt, S = aso_balanced(cls)
        stats = {"family": BALANCED, "k": cls.k}
    elif cls.kind == ANTI_BALANCED:
        opt, S, tag = aso_anti_balanced(cls)
        stats = {"family": ANTI_BALANCED, "k": cls.k, "case": tag}
    else:
        raise StrategyUnavailable(f"closed form needs a balanced or anti-balanced complete graph, got {cls.kind}")
    return SolveResult(opt, is_offensive_alliance(G, S), "closed"), stats


def _small(G: SignedGraph):
    hit = small_alliance_check(G)
    if hit.size1 is not None:
        return SolveResult(1, is_offensive_alliance(G, [hit.size1]), "small")
    if hit.size2 is not None:
        return SolveResult(2, is_offensive_alliance(G, hit.size2), "small")
    return None


def solve(G: SignedGraph, strategy: str = "auto", budget=None, decomposition=None, snd_threshold: int = 8, workers=None):
    """Dispatch to a solver; returns (SolveResult or None, stats dict)."""
    stats: dict = {}
    if strategy == "auto":
        res = _small(G)
        if res is None and classify_complete(G).kind in (BALANCED, ANTI_BALANCED):
            res, stats = _closed(G)
        if res is None:
            k = snd_partition(G).k
            stats["snd"] = k
            if k <= snd_threshold:
                res = solve_snd(G)
            else:
                res = min_offensive_alliance_bruteforce(G, budget, workers=workers)
    elif strategy == "brute":
        res = min_offensive_alliance_bruteforce(G, budget, workers=workers)
    elif strategy == "branch":
        res = min_offensive_alliance_branching(G, budget)
    elif strategy == "closed":
        res, stats = _closed(G)
    elif strategy == "ilp":
        res = solve_snd(G)
        stats["snd"] = snd_partition(G).k
    elif strategy == "dp":
        if decomposition is None:
            raise StrategyUnavailable("strategy dp needs --decomposition")
        stats["width"] = validate_domino(G, decomposition)
        res = dp_solve(G, decomposition)
    else:
        raise StrategyUnavailable(f"unknown strategy {strategy!r}")
    if res is not None:
        cert = is_offensive_alliance(G, res.alliance)
        if not cert.accepted:
            raise SakError(f"solver {res.strategy} returned a set that fails verification")
        if budget is not None and res.optimum > budget:
            res = None
    if res is not None:
        stats["explored"] = res.explored
    return res, stats


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    data = _read(args.graph)
    G = parse_signed(data.decode())
    D = None
    if args.decomposition:
        D = parse_decomposition(Path(args.decomposition).read_text(), G)
    t1 = time.perf_counter()
    res, stats = solve(G, args.strategy, args.budget, D, args.snd_threshold, args.workers)
    t2 = time.perf_counter()
    report = {
        "schema": 1,
        "tool": f"sak {__version__}",
        "command": "solve",
        "input": _digest(data),
        "strategy_requested": args.strategy,
        "budget": args.budget,
    }
    if res is None:
        report.update({"answer": "no", "strategy": args.strategy, "optimum": None, "witness": None})
    else:
        report.update({
            "answer": "yes",
            "strategy": res.strategy,
            "optimum": res.optimum,
            "witness": _labels(G, res.alliance),
        })
    report["stats"] = stats
    report["timings"] = {"parse_s": round(t1 - t0, 6), "solve_s": round(t2 - t1, 6)}
    _emit(report, args.out)
    return EXIT_OK if res is not None else EXIT_NO


# -- verify ------------------------------------------------------------------------------
def cmd_verify(args) -> int:
    data = _read(args.graph)
    G = parse_signed(data.decode())
    S = parse_set(Path(args.set).read_text(), G.labels)
    cert = is_offensive_alliance(G, S)
    body = {"schema": 1, "command": "verify", "input": _digest(data), **_certificate(G, cert)}
    if cert.accepted and not cert.boundary:
        body["note"] = "empty boundary: the set is a union of whole components"
    _emit(body, args.out)
    return EXIT_OK if cert.accepted else EXIT_NO


# -- reduce --------------------------------------------------------------------------------
def cmd_reduce(args) -> int:
    text = _read(args.source).decode()
    if args.problem == "hs":
        H = parse_hypergraph_text(text)
        inst = reduce_hitting_set(H, args.k)
        sol = min_hitting_set(H)
        src_labels = H.labels
    else:
        G0 = parse_unsigned_text(text)
        src_labels = G0.labels
        if args.problem == "vc":
            variant = SHARED if args.variant == "shared" else PER_VERTEX
            inst = reduce_vertex_cover(G0, args.k, variant, args.budget)
            sol = min_vertex_cover(G0)
        else:
            inst = reduce_unsigned_oa(G0, args.k)
            sol = min_offensive_alliance_unsigned(G0)
    G = inst.graph
    out = format_signed_json(G) if args.format == "json" else format_signed_text(G)
    sidecar = {
        "schema": 1,
        "source": inst.source,
        "k": args.k,
        "budget": inst.budget,
        "n": G.n,
        "groups": {name: _labels(G, members) for name, members in inst.groups.items()},
    }
    if sol is not None and len(sol) <= args.k:
        w = inst.witness(sol)
        sidecar["source_solution"] = [src_labels[v] for v in sorted(sol)]
        sidecar["witness"] = _labels(G, w)
        sidecar["witness_accepted"] = is_offensive_alliance(G, w).accepted
    else:
        sidecar["source_solution"] = None
        sidecar["witness"] = None
    if args.out:
        Path(args.out).write_text(out)
        side = args.sidecar or args.out + ".json"
        Path(side).write_text(json.dumps(sidecar, indent=1) + "\n")
    else:
        sys.stdout.write(out)
        if args.sidecar:
            Path(args.sidecar).write_text(json.dumps(sidecar, indent=1) + "\n")
    return EXIT_OK


# -- gen --------------------------------------------------------------------------------
def cmd_gen(args) -> int:
    fam = args.family
    if fam == "complete":
        parts = [int(x) for x in args.parts.split(",")]
        text = _fmt(gen_complete(parts, args.mode), args.format)
    elif fam == "random":
        text = _fmt(gen_random_signed(args.n, args.p_pos, args.p_neg, args.seed), args.format)
    elif fam == "hypergraph":
        text = format_hypergraph_text(gen_hypergraph(args.n, args.m, args.max_edge, args.seed))
    else:
        text = format_unsigned_text(gen_unsigned(args.n, args.p, args.seed))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _fmt(G: SignedGraph, fmt: str) -> str:
    return format_signed_json(G) if fmt == "json" else format_signed_text(G)


# -- snd / bounds ----------------------------------------------------------------------------
def cmd_snd(args) -> int:
    data = _read(args.graph)
    G = parse_signed(data.decode())
    part = snd_partition(G)
    body = {
        "schema": 1,
        "command": "snd",
        "input": _digest(data),
        "snd": part.k,
        "classes": [{"kind": kd, "members": _labels(G, c)} for c, kd in zip(part.classes, part.kinds)],
        "inter_sign": [list(row) for row in part.inter_sign],
    }
    _emit(body, args.out)
    return EXIT_OK


def cmd_check_bounds(args) -> int:
    data = _read(args.graph)
    G = parse_signed(data.decode())
    comps = []
    for comp in G.components():
        comps.append({
            "vertices": _labels(G, iter_bits(comp)),
            "min_pos_degree": G.min_pos_degree(comp),
            "max_neg_degree": G.max_neg_degree(comp),
            "existence_precondition": existence_precondition(G, comp),
            "lower_bound": size_lower_bound(G, comp),
        })
    body = {
        "schema": 1,
        "command": "check-bounds",
        "input": _digest(data),
        "connected": G.is_connected(),
        "components": comps,
    }
    if G.is_connected():
        body["existence_precondition"] = comps[0]["existence_precondition"]
        body["lower_bound"] = comps[0]["lower_bound"]
    _emit(body, args.out)
    return EXIT_OK


# -- wiring ----------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sak", description="Minimum offensive alliances in signed graphs.")
    ap.add_argument("--version", action="version", version=f"sak {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="minimum offensive alliance (or decide against --budget)")
    p.add_argument("graph")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--budget", type=int)
    p.add_argument("--decomposition")
    p.add_argument("--snd-threshold", type=int, default=8)
    p.add_argument("--workers", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set against the alliance conditions")
    p.add_argument("graph")
    p.add_argument("set")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build a signed instance from a source problem")
    p.add_argument("problem", choices=("hs", "vc", "uoa"))
    p.add_argument("source")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--variant", choices=("per_vertex", "shared"), default="per_vertex")
    p.add_argument("--budget", type=int, help="override the vertex cover budget (default 3k)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.add_argument("--sidecar")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate instances")
    p.add_argument("family", choices=("complete", "random", "hypergraph", "unsigned"))
    p.add_argument("--parts", default="3,3")
    p.add_argument("--mode", choices=("balanced", "anti_balanced", "bal", "anti"), default="balanced")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--max-edge", type=int, default=3)
    p.add_argument("--p", type=float, default=0.4)
    p.add_argument("--p-pos", type=float, default=0.3)
    p.add_argument("--p-neg", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("snd", help="signed neighbourhood diversity partition")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_snd)

    p = sub.add_parser("check-bounds", help="existence test and size lower bound")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_bounds)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except StrategyUnavailable as e:
        print(f"sak: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, GraphError, InvalidDecomposition, InvalidCertificate, ClosedFormError, OSError, ValueError) as e:
        print(f"sak: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
