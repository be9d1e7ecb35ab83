"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 resource limit, 4 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Optional

from .graphio import GraphParseError, parse_edge_list, parse_graph6, to_dot
from .graphs import Graph, GraphError, completion_sequence, standard_graph, weak_chordality_witness
from .groebner import BettiTable
from .pipeline import SCHEMA, SUITES, classify, verify_wc_pipeline

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT, EXIT_PRECONDITION = 0, 1, 2, 3, 4

MAX_PD_VERTICES = 9
MAX_EXHAUSTIVE_N = 8
MAX_SYMBOLIC_ELL = 9

_KIND = re.compile(r"^(complete|cycle|path|antihole|edgeless):(\d+)$")


class CliError(Exception):
    def __init__(self, code: int, message: str, payload: Optional[dict] = None):
        super().__init__(message)
        self.code = code
        self.payload = payload or {}


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    fmt: str = "auto"
    out: str = "json"
    threads: int = 1
    seed: int = 0
    bounds: dict = field(default_factory=dict)


# -- input ----------------------------------------------------------------------------
def _looks_like_graph6(text: str) -> bool:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        return True
    return bool(s) and "\n" not in s and " " not in s and not s.isdigit()


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "graph6" if _looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphParseError("expected exactly one graph6 line", 1 if not lines else 2, 1)
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def load_graph(source: str, fmt: str = "auto") -> Graph:
    """A file path, '-' for stdin, 'kind:n' for a standard graph, or an inline graph6 string."""
    m = _KIND.match(source)
    if m:
        try:
            return standard_graph(m.group(1), int(m.group(2)))
        except GraphError as exc:
            raise GraphParseError(str(exc), 1, len(m.group(1)) + 2) from exc
    if source == "-":
        return parse_graph_text(sys.stdin.read(), fmt)
    if os.path.exists(source):
        with open(source) as fh:
            return parse_graph_text(fh.read(), fmt)
    if fmt == "edgelist":
        raise GraphParseError(f"no such file: {source}", 1, 1)
    return parse_graph6(source)


# -- output ---------------------------------------------------------------------------
def _emit(obj: dict, out: str, text_lines=None, dot=None) -> None:
    if out == "json":
        print(json.dumps(obj, sort_keys=True, default=str))
    elif out == "dot" and dot is not None:
        sys.stdout.write(dot)
    else:
        for line in text_lines if text_lines is not None else _flat_lines(obj):
            print(line)


def _flat_lines(obj: dict) -> list:
    return [f"{k}: {v}" for k, v in obj.items() if k != "schema"]


def _dot_with_cycle(G: Graph, cycle) -> str:
    if not cycle:
        return to_dot(G)
    on_cycle = {tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)]))) for i in range(len(cycle))}
    lines = to_dot(G).splitlines()
    out = []
    for line in lines:
        m = re.match(r"\s*(\d+) -- (\d+);", line)
        if m and (int(m.group(1)), int(m.group(2))) in on_cycle:
            line = line[:-1] + " [color=red];"
        out.append(line)
    return "\n".join(out) + "\n"


# -- commands -------------------------------------------------------------------------
def cmd_classify(cfg: RunConfig) -> int:
    G = load_graph(cfg.graph, cfg.fmt)
    rep = classify(G)
    cycle = rep["witness_cycle"]
    where = " (in complement)" if rep["witness_in_complement"] else ""
    lines = [
        f"vertices: {G.n}  edges: {len(G.edges)}",
        f"chordal: {'yes' if rep['chordal'] else 'no'}",
        f"weakly chordal: {'yes' if rep['weakly_chordal'] else 'no'}",
        f"witness cycle: {cycle}{where}" if cycle else "witness cycle: none",
        f"predicted pd: {rep['predicted_pd']}",
    ]
    dot_cycle = cycle if cycle and not rep["witness_in_complement"] else None
    _emit(rep, cfg.out, lines, _dot_with_cycle(G, dot_cycle))
    return EXIT_OK


def cmd_pd(cfg: RunConfig) -> int:
    G = load_graph(cfg.graph, cfg.fmt)
    if G.n > MAX_PD_VERTICES:
        raise CliError(EXIT_LIMIT, f"pd computation is limited to n <= {MAX_PD_VERTICES}, got n = {G.n}")
    rep = classify(G, with_pd=True)
    if not cfg.bounds.get("betti"):
        rep.pop("betti")
    verdict = "CONSISTENT" if rep["consistent"] else "INCONSISTENT"
    lines = [f"pd: {rep['pd']}", f"predicted pd: {rep['predicted_pd']}", verdict]
    if "betti" in rep:
        lines += ["betti:", BettiTable.from_dict(rep).to_text()]
    _emit(rep, cfg.out, lines)
    return EXIT_OK if rep["consistent"] else EXIT_FAIL


def _suite_kwargs(suite: str, b: dict, threads: int, seed: int) -> dict:
    ells = b.get("ell")
    max_n = b.get("max_n")
    if ells and max(ells) > MAX_SYMBOLIC_ELL:
        raise CliError(EXIT_LIMIT, f"ell is limited to <= {MAX_SYMBOLIC_ELL}")
    if max_n is not None and max_n > MAX_EXHAUSTIVE_N:
        raise CliError(EXIT_LIMIT, f"exhaustive sweeps are limited to n <= {MAX_EXHAUSTIVE_N}")
    kw = {}
    if suite in ("main-theorem", "b-sequence", "hilbert", "terao") and max_n is not None:
        kw["max_n"] = max_n
    if suite == "main-theorem":
        kw["workers"] = threads
    if suite in ("antihole", "saito", "identities", "explicit", "cycles") and ells:
        kw["ells"] = tuple(ells)
    if suite in ("hilbert", "terao"):
        kw["seed"] = seed
        if b.get("count") is not None:
            kw["count"] = b["count"]
    if suite == "hilbert" and b.get("max_degree") is not None:
        kw["max_degree"] = b["max_degree"]
    return kw


def cmd_verify(cfg: RunConfig) -> int:
    suite = cfg.bounds["suite"]
    rep = SUITES[suite](**_suite_kwargs(suite, cfg.bounds, cfg.threads, cfg.seed))
    obj = {"schema": SCHEMA, "suite": suite, "ok": rep.ok, "checks": len(rep.checks),
           "passed": sum(rep.checks.values()), "failures": rep.failures()}
    lines = [f"suite {suite}: {obj['passed']}/{obj['checks']} checks passed"]
    lines += [f"FAIL {f['check']}: {f['detail']}" for f in obj["failures"]]
    _emit(obj, cfg.out, lines)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_search(cfg: RunConfig) -> int:
    from .search import search_counterexamples

    n = cfg.bounds["n"]
    if n > MAX_EXHAUSTIVE_N:
        raise CliError(EXIT_LIMIT, f"search is limited to n <= {MAX_EXHAUSTIVE_N}, got n = {n}")
    hits = search_counterexamples(n, min_pd=cfg.bounds.get("min_pd", 3), resume=cfg.bounds.get("resume"),
                                  workers=cfg.threads)
    obj = {"schema": SCHEMA, "n": n, "count": len(hits), "hits": hits}
    lines = [f"n = {n}: {len(hits)} hit(s)"]
    for h in hits:
        lines += [f"{h['graph6']}  pd {h['pd']}", BettiTable.from_dict(h).to_text()]
    _emit(obj, cfg.out, lines)
    return EXIT_OK


def cmd_sequence(cfg: RunConfig) -> int:
    G = load_graph(cfg.graph, cfg.fmt)
    witness = weak_chordality_witness(G)
    if witness is not None:
        cycle, in_complement = witness
        raise CliError(EXIT_PRECONDITION, "graph is not weakly chordal",
                       {"witness_cycle": list(cycle), "witness_in_complement": in_complement})
    seq = completion_sequence(G)
    obj = {"schema": SCHEMA, "graph": {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]},
           "sequence": [list(e) for e in seq.added], "problems": seq.verify()}
    lines = [f"completion sequence ({len(seq.added)} edges): " + " ".join(f"{u}-{v}" for u, v in seq.added)]
    code = EXIT_OK if not obj["problems"] else EXIT_FAIL
    if cfg.bounds.get("check_b"):
        rep = verify_wc_pipeline(G)
        obj["steps"] = rep.details["steps"]
        obj["ok"] = rep.ok
        obj["failures"] = rep.failures()
        for st in obj["steps"]:
            lines.append(f"  delete {st['edge']}: surjective={st['surjective']} "
                         f"degree_ok={st['degree_ok']} L2_free={st['l2_free_combinatorial']}")
        if not rep.ok:
            code = EXIT_FAIL
    _emit(obj, cfg.out, lines)
    return code


COMMANDS = {"classify": cmd_classify, "pd": cmd_pd, "verify": cmd_verify,
            "search": cmd_search, "sequence": cmd_sequence}


# -- argument parsing -----------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("json", "text", "dot"), default="json",
                        help="output format (dot is only meaningful for classify)")
    common.add_argument("--threads", type=int, default=1, metavar="N", help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph", help="file path, '-' for stdin, kind:n (complete, cycle, path, "
                                        "antihole, edgeless) or an inline graph6 string")
    graph_in.add_argument("--format", dest="fmt", choices=("auto", "edgelist", "graph6"), default="auto",
                          help="input format (auto-detected by default)")

    p = argparse.ArgumentParser(prog="graphic-pd", description="Projective dimension of graphic arrangements.",
                                epilog="exit codes: 0 ok, 1 verification failure, 2 parse error, "
                                       "3 resource limit, 4 precondition violation")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common, graph_in], help="chordality flags and predicted pd")
    sp = sub.add_parser("pd", parents=[common, graph_in], help="compute pd of D(A(G))")
    sp.add_argument("--betti", action="store_true", help="include the graded Betti table")

    sv = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sv.add_argument("suite", choices=sorted(SUITES))
    sv.add_argument("--max-n", type=int, help="vertex bound for exhaustive or random sweeps")
    sv.add_argument("--ell", type=int, nargs="+", help="dimensions for the symbolic families")
    sv.add_argument("--max-degree", type=int, metavar="D", help="Hilbert-oracle depth")
    sv.add_argument("--count", type=int, help="number of sampled instances")

    ss = sub.add_parser("search", parents=[common], help="search for pd >= 3 graphs without long holes")
    ss.add_argument("n", type=int)
    ss.add_argument("--resume", metavar="FILE", help="JSON-lines checkpoint to append to and resume from")
    ss.add_argument("--min-pd", type=int, default=3)

    sq = sub.add_parser("sequence", parents=[common, graph_in], help="completion sequence of a weakly chordal graph")
    sq.add_argument("--check-b", action="store_true", help="check each reverse deletion step")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    reserved = {"command", "graph", "fmt", "out", "threads", "seed"}
    bounds = {k: v for k, v in vars(ns).items() if k not in reserved}
    return RunConfig(ns.command, getattr(ns, "graph", None), getattr(ns, "fmt", "auto"), ns.out,
                     max(1, ns.threads), ns.seed, bounds)


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except GraphParseError as exc:
        err = {"schema": SCHEMA, "error": "parse", "message": str(exc), "line": exc.line, "column": exc.column}
        code = EXIT_PARSE
    except CliError as exc:
        err = {"schema": SCHEMA, "error": {EXIT_LIMIT: "limit", EXIT_PRECONDITION: "precondition"}.get(exc.code, "error"),
               "message": str(exc), **exc.payload}
        code = exc.code
    print(json.dumps(err, sort_keys=True), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
