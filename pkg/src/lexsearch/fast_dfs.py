"""Fast LexDFS / LexDOWN: an ordered list of the labeled unnumbered vertices.

Instead of rescanning labels, the engine keeps every labeled unnumbered
vertex in a doubly linked list sorted by decreasing label, plus a per-vertex
integer ``order`` that mirrors list rank.  Each step pops the list front,
sorts the pivot's unnumbered neighbors by their order keys and relinks them:

* LexDFS: neighbors move to the list *front*; processed in ascending key
  order so the previously-greatest lands frontmost; a global counter
  increments and stamps each moved vertex's order.
* LexDOWN: neighbors move to the list *rear*; processed in descending key
  order (prepending vs. appending mirrors the scan direction, so keeping
  the relocated block internally sorted forces the flip); the counter
  decrements.

Each vertex relocates at most degree times and each per-step sort touches
only the pivot's neighbors, so a run costs O(n + m log m).  Labels are not
needed to run the search; with debug invariants enabled they are
materialized and the list order is checked after every step.
"""

from __future__ import annotations

import os
from typing import Sequence

from .counters import OpCounters
from .graph import DisconnectedGraphError, Graph
from .labels import GREATER, INF, MINUS_INF, SearchKind, lex_compare
from .linkedlist import LinkedList


def debug_invariants_enabled() -> bool:
    """True when LEXSEARCH_DEBUG_INVARIANTS=1 is set in the environment."""
    return os.environ.get("LEXSEARCH_DEBUG_INVARIANTS", "") == "1"


def sort_neighbors(
    neighbors: Sequence[int],
    order_of: Sequence[float],
    descending: bool = False,
    counters: OpCounters | None = None,
    debug: bool = False,
) -> list[int]:
    """Order a pivot's neighbors by their order keys for processing.

    Never-labeled vertices (key MINUS_INF) tie; they are placed first when
    ascending, last when descending, in ascending vertex id either way.
    Live runs never hold equal finite keys; with ``debug`` that is asserted.
    Equal finite keys otherwise keep their input order (stable sort).
    Comparator calls are charged to ``counters.comparisons``.
    """
    if counters is None:
        counters = OpCounters()
    keyed = [
        (order_of[v], v if order_of[v] == MINUS_INF else 0, v) for v in neighbors
    ]
    ascending = _counting_sort(keyed, counters)
    if debug:
        finite = [k for k, _, _ in ascending if k != MINUS_INF]
        assert len(finite) == len(set(finite)), (
            f"duplicate finite order keys among neighbors: {finite}"
        )
    if not descending:
        return [v for _, _, v in ascending]
    split = 0
    while split < len(ascending) and ascending[split][0] == MINUS_INF:
        split += 1
    finite_desc = [v for _, _, v in reversed(ascending[split:])]
    never_asc = [v for _, _, v in ascending[:split]]
    return finite_desc + never_asc


def _counting_sort(keyed: list, counters: OpCounters) -> list:
    """Stable insertion-based merge sort that counts key comparisons."""
    if len(keyed) <= 1:
        return list(keyed)
    mid = len(keyed) // 2
    left = _counting_sort(keyed[:mid], counters)
    right = _counting_sort(keyed[mid:], counters)
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        counters.comparisons += 1
        if right[j][:2] < left[i][:2]:
            merged.append(right[j])
            j += 1
        else:
            merged.append(left[i])
            i += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged


def fast_lexdfs(
    g: Graph,
    *,
    debug: bool | None = None,
    allow_disconnected: bool = False,
) -> tuple[list[int], OpCounters]:
    """Compute a LexDFS ordering in O(n + m log m)."""
    return _list_search(
        g, SearchKind.LEXDFS, debug=debug, allow_disconnected=allow_disconnected
    )


def fast_lexdown(
    g: Graph,
    *,
    debug: bool | None = None,
    allow_disconnected: bool = False,
) -> tuple[list[int], OpCounters]:
    """Compute a LexDOWN ordering in O(n + m log m)."""
    return _list_search(
        g, SearchKind.LEXDOWN, debug=debug, allow_disconnected=allow_disconnected
    )


def _list_search(
    g: Graph,
    kind: SearchKind,
    *,
    debug: bool | None,
    allow_disconnected: bool,
) -> tuple[list[int], OpCounters]:
    if kind not in (SearchKind.LEXDFS, SearchKind.LEXDOWN):
        raise ValueError(f"list engine does not handle {kind}")
    if debug is None:
        debug = debug_invariants_enabled()
    down = kind is SearchKind.LEXDOWN
    n = g.n
    counters = OpCounters()
    order: list[float] = [MINUS_INF] * (n + 1)
    posn = [None] * (n + 1)
    numbered = [False] * (n + 1)
    labels = [()] * (n + 1) if debug else None
    unnumbered = LinkedList()
    order[g.source] = 0
    posn[g.source] = unnumbered.append(g.source)
    if debug:
        labels[g.source] = (INF,)
    max_counter = 0
    degree_mass = 0  # sum of degrees of numbered vertices, for debug bounds
    restart_cursor = 1
    sigma: list[int] = []

    for i in range(1, n + 1):
        node = unnumbered.first
        if node is None:
            if not allow_disconnected:
                raise DisconnectedGraphError(
                    f"candidate list empty at step {i}: graph is disconnected"
                )
            while numbered[restart_cursor]:
                restart_cursor += 1
            v = restart_cursor
            # The restart vertex is alone in the list; giving it the current
            # counter value keeps the order bounds intact.
            order[v] = max_counter
            posn[v] = unnumbered.append(v)
            if debug:
                labels[v] = (INF,)
            node = unnumbered.first
        v = node.value
        node.unlink()
        posn[v] = None
        numbered[v] = True
        sigma.append(v)
        degree_mass += g.degree(v)

        nbrs = [w for w in g.adj[v] if not numbered[w]]
        counters.sort_elements += len(nbrs)
        for w in sort_neighbors(nbrs, order, descending=down,
                                counters=counters, debug=debug):
            if order[w] != MINUS_INF:
                posn[w].unlink()
            if down:
                posn[w] = unnumbered.append(w)
                max_counter -= 1
            else:
                posn[w] = unnumbered.appendleft(w)
                max_counter += 1
            order[w] = max_counter
            counters.node_moves += 1
            counters.label_entries += 1
            if debug:
                value = kind.step_value(i, n)
                labels[w] = (value,) + labels[w]
        if debug:
            _check_list_invariants(
                g, kind, unnumbered, order, posn, labels, numbered,
                max_counter, degree_mass,
            )
    return sigma, counters


def _check_list_invariants(
    g: Graph,
    kind: SearchKind,
    unnumbered: LinkedList,
    order: list[float],
    posn: list,
    labels: list,
    numbered: list[bool],
    max_counter: int,
    degree_mass: int,
) -> None:
    down = kind is SearchKind.LEXDOWN
    listed = list(unnumbered)
    # Membership: exactly the labeled unnumbered vertices, handles in sync.
    expected = {v for v in range(1, g.n + 1) if not numbered[v] and labels[v]}
    assert set(listed) == expected, (listed, expected)
    assert len(listed) == len(expected)
    for v in listed:
        assert posn[v] is not None and posn[v].value == v
        assert order[v] != MINUS_INF
    for v in range(1, g.n + 1):
        if not labels[v]:
            assert order[v] == MINUS_INF
    # Labels weakly decreasing, orders strictly decreasing, front to back.
    for a, b in zip(listed, listed[1:]):
        assert lex_compare(labels[b], labels[a]) != GREATER, (
            f"list out of label order: {a}{labels[a]} before {b}{labels[b]}"
        )
        assert order[a] > order[b], (a, b, order[a], order[b])
    finite = [order[v] for v in range(1, g.n + 1) if order[v] != MINUS_INF]
    if down:
        assert all(max_counter <= o for o in finite)
        assert abs(max_counter) <= degree_mass
    else:
        assert all(max_counter >= o for o in finite)
        assert max_counter <= degree_mass
