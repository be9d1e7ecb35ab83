"""Exhaustive search for graphs of high projective dimension without long holes.

Each examined isomorphism class is appended to an optional JSON-lines
checkpoint keyed by its canonical graph6 string, so an interrupted run can
resume where it stopped.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .arrangement import betti_graph, seed_cache
from .graphio import parse_graph6
from .graphs import Graph, canonical_string, complement, enumerate_graphs, find_induced_cycle
from .groebner import BettiTable


def has_long_hole(G: Graph, length: int) -> bool:
    """G or its complement has a chordless cycle with at least ``length`` vertices."""
    return find_induced_cycle(G, length) is not None or find_induced_cycle(complement(G), length) is not None


def _examine(args):
    key, hole = args
    G = parse_graph6(key)
    if has_long_hole(G, hole):
        return {"key": key, "filtered": True}
    b = betti_graph(G)
    return {"key": key, "filtered": False, "pd": b.projective_dimension, "betti": b.to_dict()["betti"]}


def _betti_of(key):
    return key, betti_graph(parse_graph6(key)).to_dict()


def prefetch_betti(graphs, workers: int = 1) -> None:
    """Fill the Betti cache for ``graphs`` using a process pool.

    Results are keyed by canonical string, so the order in which workers
    finish never affects what callers later read from the cache.
    """
    if workers <= 1:
        return
    keys = sorted({canonical_string(G) for G in graphs})
    with ProcessPoolExecutor(max_workers=workers) as pool:
        found = dict(pool.map(_betti_of, keys, chunksize=8))
    seed_cache({k: BettiTable.from_dict(v) for k, v in found.items()})


def load_checkpoint(path: str) -> dict:
    done = {}
    if not path or not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # a torn final line from an interrupted write
            done[rec["key"]] = rec
    return done


def search_counterexamples(n: int, min_pd: int = 3, hole: int = 6, resume: Optional[str] = None,
                           workers: int = 1, progress=None) -> list:
    """All classes on n vertices with pd >= min_pd and no hole of length >= ``hole`` in G or G^C.

    Returns records {"key", "graph6", "pd", "betti"} sorted by key.
    """
    done = load_checkpoint(resume)
    todo = []
    for G in enumerate_graphs(n):
        key = canonical_string(G)
        if key not in done:
            todo.append(key)
    out = open(resume, "a+") if resume else None
    if out is not None and out.tell():
        out.seek(out.tell() - 1)
        if out.read(1) != "\n":
            out.write("\n")  # isolate a torn final record
    try:
        def consume(results):
            for rec in results:
                done[rec["key"]] = rec
                if out is not None:
                    out.write(json.dumps(rec, sort_keys=True) + "\n")
                    out.flush()
                if progress is not None:
                    progress(rec)

        jobs = [(k, hole) for k in todo]
        if workers > 1 and jobs:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                consume(pool.map(_examine, jobs, chunksize=8))
        else:
            consume(map(_examine, jobs))
    finally:
        if out is not None:
            out.close()
    hits = []
    for key in sorted(done):
        rec = done[key]
        if not rec.get("filtered") and rec["pd"] >= min_pd:
            hits.append({"key": key, "graph6": key, "pd": rec["pd"], "betti": rec["betti"]})
    return hits


def hit_betti(rec) -> BettiTable:
    return BettiTable.from_dict({"betti": rec["betti"]})
