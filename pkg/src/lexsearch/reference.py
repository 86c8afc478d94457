"""The generic label search, run naively: the executable specification.

Every step picks an unnumbered vertex whose label is lexicographically
maximal, then grows the labels of its unnumbered neighbors according to
the search kind.  This O(n*m) engine is the oracle the fast engines are
judged against; ``enumerate_orderings`` additionally branches over every
maximal candidate and thus produces the complete set of orderings any
tie-breaking could yield.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graph import DisconnectedGraphError, Graph
from .labels import (
    EQUAL,
    GREATER,
    INF,
    Label,
    SearchKind,
    format_label,
    lex_compare,
    lex_compare_counted,
)

TieBreak = Callable[[list[int]], int]


class InvalidPrefixError(ValueError):
    """A forced prefix picks a vertex whose label is not maximal."""

    def __init__(self, position: int, vertex: int, message: str):
        self.position = position
        self.vertex = vertex
        super().__init__(f"prefix position {position} (vertex {vertex}): {message}")


@dataclass(frozen=True)
class TraceStep:
    step: int
    vertex: int
    label: Label
    #: labeled unnumbered vertices at selection time (chosen one included)
    candidates: tuple[int, ...]

    def format(self) -> str:
        return f"step {self.step}: vertex {self.vertex} label {format_label(self.label)}"


@dataclass
class SearchTrace:
    steps: list[TraceStep] = field(default_factory=list)
    comparisons: int = 0
    updates: int = 0
    label_entries: int = 0

    def format_lines(self) -> list[str]:
        return [s.format() for s in self.steps]

    def selection_labels(self) -> list[Label]:
        return [s.label for s in self.steps]


def lowest_id(candidates: list[int]) -> int:
    """Default tie-break: smallest vertex id among maximal-label candidates."""
    return min(candidates)


def reference_search(
    g: Graph,
    kind: SearchKind,
    tie_break: TieBreak = lowest_id,
    *,
    record_candidates: bool = True,
    allow_disconnected: bool = False,
) -> tuple[list[int], SearchTrace]:
    """Run the naive search; returns the ordering and its full trace.

    ``tie_break`` picks among the candidates whose labels tie for maximal.
    On a disconnected graph the search raises unless ``allow_disconnected``
    is set, in which case it restarts from the smallest-id unnumbered
    vertex with a fresh infinity label.
    """
    n = g.n
    labels: list[Label] = [()] * (n + 1)
    labels[g.source] = (INF,)
    numbered = [False] * (n + 1)
    # Labeled unnumbered vertices, maintained with swap-removal.
    candidates: list[int] = [g.source]
    cand_index: list[int] = [-1] * (n + 1)
    cand_index[g.source] = 0
    trace = SearchTrace()
    sigma: list[int] = []
    restart_cursor = 1

    def drop_candidate(v: int) -> None:
        idx = cand_index[v]
        last = candidates[-1]
        candidates[idx] = last
        cand_index[last] = idx
        candidates.pop()
        cand_index[v] = -1

    for i in range(1, n + 1):
        if not candidates:
            if not allow_disconnected:
                raise DisconnectedGraphError(
                    f"no labeled unnumbered vertex at step {i}: graph is disconnected"
                )
            while numbered[restart_cursor]:
                restart_cursor += 1
            v = restart_cursor
            labels[v] = (INF,)
            candidates.append(v)
            cand_index[v] = 0
        best = candidates[0]
        ties = [best]
        best_label = labels[best]
        for v in candidates[1:]:
            cmp, examined = lex_compare_counted(labels[v], best_label)
            trace.comparisons += examined + 1
            if cmp == GREATER:
                best = v
                best_label = labels[v]
                ties = [v]
            elif cmp == EQUAL:
                ties.append(v)
        chosen = ties[0] if len(ties) == 1 else tie_break(ties)
        sigma.append(chosen)
        numbered[chosen] = True
        drop_candidate(chosen)
        trace.steps.append(
            TraceStep(
                step=i,
                vertex=chosen,
                label=labels[chosen],
                candidates=(
                    tuple(sorted(candidates + [chosen])) if record_candidates else ()
                ),
            )
        )
        for w in g.adj[chosen]:
            if numbered[w]:
                continue
            if not labels[w]:
                cand_index[w] = len(candidates)
                candidates.append(w)
            labels[w] = _grow(labels[w], kind, i, n)
            trace.updates += 1
            trace.label_entries += 1
    return sigma, trace


def _grow(label: Label, kind: SearchKind, i: int, n: int) -> Label:
    value = kind.step_value(i, n)
    return (value,) + label if kind.prepends else label + (value,)


def enumerate_orderings(
    g: Graph,
    kind: SearchKind,
    prefix: Sequence[int] = (),
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """All orderings the search could output under some tie-breaking.

    Branches on every lexicographically maximal candidate at each step,
    with choices forced along ``prefix`` first.  Intended for small graphs
    (the CLI refuses n > 12 without --force).  Raises InvalidPrefixError
    if a prefix element was not a maximal candidate at its position, and
    DisconnectedGraphError on disconnected input.
    """
    n = g.n
    if limit is not None and limit <= 0:
        return []
    prefix = list(prefix)
    if len(prefix) > n:
        raise InvalidPrefixError(
            n + 1, prefix[n], f"prefix longer than the vertex count {n}"
        )
    labels: list[Label] = [()] * (n + 1)
    labels[g.source] = (INF,)
    numbered = [False] * (n + 1)
    results: list[tuple[int, ...]] = []
    sigma: list[int] = []

    def maximal_candidates() -> list[int]:
        best_label: Label | None = None
        ties: list[int] = []
        for v in range(1, n + 1):
            if numbered[v] or not labels[v]:
                continue
            if best_label is None:
                best_label, ties = labels[v], [v]
                continue
            cmp = lex_compare(labels[v], best_label)
            if cmp == GREATER:
                best_label, ties = labels[v], [v]
            elif cmp == EQUAL:
                ties.append(v)
        return ties

    def step(i: int) -> bool:
        """Explore step i; returns False once the result limit is reached."""
        if i > n:
            results.append(tuple(sigma))
            return limit is None or len(results) < limit
        ties = maximal_candidates()
        if not ties:
            raise DisconnectedGraphError(
                f"no labeled unnumbered vertex at step {i}: graph is disconnected"
            )
        if i <= len(prefix):
            forced = prefix[i - 1]
            if forced not in ties:
                raise InvalidPrefixError(
                    i,
                    forced,
                    f"label {format_label(labels[forced]) if 1 <= forced <= n else '?'}"
                    f" is not maximal (maximal candidates: {sorted(ties)})",
                )
            ties = [forced]
        for chosen in sorted(ties):
            sigma.append(chosen)
            numbered[chosen] = True
            touched: list[int] = []
            for w in g.adj[chosen]:
                if not numbered[w]:
                    touched.append(w)
                    labels[w] = _grow(labels[w], kind, i, n)
            keep_going = step(i + 1)
            for w in touched:
                labels[w] = labels[w][1:] if kind.prepends else labels[w][:-1]
            numbered[chosen] = False
            sigma.pop()
            if not keep_going:
                return False
        return True

    step(1)
    return results
