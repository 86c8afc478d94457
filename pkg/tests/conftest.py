from __future__ import annotations

import random

import pytest

import lexsearch as lx
from lexsearch import SearchKind

# The 3x3 grid fixture used by the golden tests.  Vertex ids follow the
# drawn fixture, not row-major order: 1,2,5 / 3,4,7 / 6,8,9.
GRID_EDGES = [
    (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 6),
    (4, 7), (4, 8), (5, 7), (6, 8), (7, 9), (8, 9),
]

GRID_EDGE_LIST_TEXT = "\n".join(f"{u} {v}" for u, v in GRID_EDGES) + "\n"

#: Golden orderings transcribed from the drawn examples, one per kind.
#: The lexdown one is reproduced as drawn even though it is not actually a
#: valid LexDOWN ordering (see GRID_LEXDOWN_UNIQUE and the verifier tests).
GRID_GOLDEN_ORDERINGS = {
    SearchKind.LEXBFS: [1, 2, 3, 4, 5, 6, 7, 8, 9],
    SearchKind.LEXUP: [1, 2, 5, 7, 9, 8, 6, 4, 3],
    SearchKind.LEXDFS: [1, 2, 4, 3, 6, 8, 9, 7, 5],
    SearchKind.LEXDOWN: [1, 2, 3, 5, 4, 6, 7, 9, 8],
}

#: The unique LexDOWN ordering of the grid once steps 1 and 2 pick 1, 2
#: (brute-force enumeration says there is exactly one).
GRID_LEXDOWN_UNIQUE = [1, 2, 3, 5, 4, 6, 7, 8, 9]

#: Per-step selection labels regenerated from the update rules along each
#: golden ordering (the trace a forced replay produces), steps 1..9.
INF = lx.INF
GRID_GOLDEN_TABLES = {
    SearchKind.LEXBFS: [
        (INF,), (8,), (8,), (7, 6), (7,), (6,), (5, 4), (5, 3), (2, 1),
    ],
    SearchKind.LEXUP: [
        (INF,), (1,), (2,), (3,), (4,), (5,), (6,), (2, 4, 6), (1, 7, 8),
    ],
    SearchKind.LEXDFS: [
        (INF,), (1,), (2,), (3, 1), (4,), (5, 3), (6,), (7, 3), (8, 2),
    ],
    SearchKind.LEXDOWN: [
        (INF,), (8,), (8,), (7,), (6, 7), (6,), (4, 5), (2,), (1, 3, 4),
    ],
}

#: Deterministic outputs of the fast engines on the grid fixture
#: (regression values; each is verifier-checked in the tests too).
GRID_FAST_OUTPUTS = {
    SearchKind.LEXBFS: [1, 2, 3, 4, 5, 6, 7, 8, 9],
    SearchKind.LEXUP: [1, 2, 4, 7, 9, 8, 6, 5, 3],
    SearchKind.LEXDFS: [1, 3, 6, 8, 4, 2, 5, 7, 9],
    SearchKind.LEXDOWN: [1, 2, 3, 5, 4, 6, 7, 8, 9],
}

#: 5-vertex graph on which the flat seeded refinement control produces an
#: invalid LexUP ordering (its label [i] must jump over unrelated sets).
UP_CONTROL_EDGES = [(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (4, 5)]

FAST_ENGINES = {
    SearchKind.LEXBFS: lx.fast_lexbfs,
    SearchKind.LEXUP: lx.fast_lexup,
    SearchKind.LEXDFS: lx.fast_lexdfs,
    SearchKind.LEXDOWN: lx.fast_lexdown,
}

ALL_KINDS = tuple(SearchKind)


def make_grid() -> lx.Graph:
    return lx.Graph(9, GRID_EDGES, 1)


@pytest.fixture
def grid() -> lx.Graph:
    return make_grid()


def random_connected(rng: random.Random, n: int, density: float | None = None) -> lx.Graph:
    if density is None:
        density = rng.uniform(0.05, 0.9)
    return lx.random_connected_graph(
        n, min(1.0, density), rng.randint(0, 2**31), source=rng.randint(1, n)
    )


def small_corpus(seed: int, count: int, min_n: int = 2, max_n: int = 7) -> list[lx.Graph]:
    """Random connected graphs small enough to enumerate exhaustively."""
    rng = random.Random(seed)
    return [random_connected(rng, rng.randint(min_n, max_n)) for _ in range(count)]


def medium_corpus(seed: int, count: int) -> list[lx.Graph]:
    """Mixed-density connected graphs with n in [8, 300].

    Density is kept low for the larger sizes so debug-invariant sweeps
    stay affordable; small graphs go up to quite dense.
    """
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        bucket = rng.random()
        if bucket < 0.6:
            n = rng.randint(8, 300)
            density = rng.uniform(2.0, 5.0) / n
        elif bucket < 0.85:
            n = rng.randint(8, 100)
            density = rng.uniform(0.1, 0.3)
        else:
            n = rng.randint(8, 40)
            density = rng.uniform(0.4, 0.9)
        graphs.append(random_connected(rng, n, density))
    return graphs


def all_labeled_graphs(n: int) -> list[lx.Graph]:
    """Every connected labeled graph on vertices 1..n (n <= 5 is sane)."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    graphs = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = lx.Graph(n, edges, 1)
        if lx.is_connected(g):
            graphs.append(g)
    return graphs
