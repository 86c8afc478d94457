"""Operation-count benchmark: desk-scale complexity certification.

For each size the harness builds a graph, runs the requested engine and
reports wall time plus operation counters, normalized by the engine's
complexity budget:

* fast LexBFS/LexUP        counters / (n + m)
* fast LexDFS/LexDOWN      counters / (n + m * log2 m)
* reference (any kind)     counters / (n * m)

A bounded ratio across sizes is the empirical stand-in for the asymptotic
claims, which cannot be measured directly.
"""

from __future__ import annotations

import math
import time
from typing import Callable

from .counters import OpCounters
from .fast_bfs import fast_lexbfs, fast_lexup
from .fast_dfs import fast_lexdfs, fast_lexdown
from .graph import (
    Graph,
    GraphError,
    clique_graph,
    grid_graph,
    path_graph,
    random_connected_graph,
)
from .labels import SearchKind
from .reference import reference_search

FAMILIES = ("grid", "path", "clique", "random")
ENGINES = ("fast", "reference")

FAST_ENGINES: dict[SearchKind, Callable] = {
    SearchKind.LEXBFS: fast_lexbfs,
    SearchKind.LEXUP: fast_lexup,
    SearchKind.LEXDFS: fast_lexdfs,
    SearchKind.LEXDOWN: fast_lexdown,
}

#: Average degree targeted by the random family (m is about 4n).
RANDOM_AVG_DEGREE = 8.0


def build_family_graph(family: str, size: int, seed: int) -> Graph:
    """A graph of roughly ``size`` vertices from the named family."""
    if size < 1:
        raise GraphError(f"size must be positive, got {size}")
    if family == "grid":
        side = max(2, round(math.sqrt(size)))
        return grid_graph(side, side)
    if family == "path":
        return path_graph(size)
    if family == "clique":
        return clique_graph(size)
    if family == "random":
        if size == 1:
            return path_graph(1)
        p = min(1.0, RANDOM_AVG_DEGREE / (size - 1))
        return random_connected_graph(size, p, seed)
    raise GraphError(f"unknown family {family!r}")


def run_engine(
    g: Graph, kind: SearchKind, engine: str
) -> tuple[list[int], OpCounters]:
    if engine == "fast":
        return FAST_ENGINES[kind](g)
    if engine == "reference":
        sigma, trace = reference_search(g, kind, record_candidates=False)
        counters = OpCounters(
            comparisons=trace.comparisons, label_entries=trace.label_entries
        )
        return sigma, counters
    raise ValueError(f"unknown engine {engine!r}")


def budget(engine: str, kind: SearchKind, n: int, m: int) -> float:
    """The operation budget counters are normalized by."""
    if engine == "reference":
        return float(n * max(m, 1))
    if kind in (SearchKind.LEXBFS, SearchKind.LEXUP):
        return float(n + m)
    return n + m * math.log2(max(m, 2))


def run_bench(
    family: str,
    sizes: list[int],
    seed: int,
    kind: SearchKind,
    engine: str,
) -> dict:
    """Run one engine over a size sweep; returns the JSON-ready report."""
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    results = []
    for index, size in enumerate(sizes):
        g = build_family_graph(family, size, seed + index)
        start = time.perf_counter()
        _, counters = run_engine(g, kind, engine)
        elapsed = time.perf_counter() - start
        ratio = counters.total() / budget(engine, kind, g.n, g.m)
        results.append(
            {
                "size": size,
                "n": g.n,
                "m": g.m,
                "seconds": round(elapsed, 6),
                "counters": counters.to_json_dict(),
                "ratio": round(ratio, 6),
            }
        )
    ratios = [r["ratio"] for r in results if r["ratio"] > 0]
    spread = (max(ratios) / min(ratios)) if ratios else None
    return {
        "family": family,
        "search": kind.value,
        "engine": engine,
        "seed": seed,
        "results": results,
        "ratio_spread": round(spread, 6) if spread is not None else None,
    }
