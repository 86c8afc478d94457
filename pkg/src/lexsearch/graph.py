"""Graph representation, parsing, generation and structural validation.

Vertices are dense integers ``1..n``.  Graphs are simple and undirected,
carry a designated source vertex, and are treated as immutable after
construction.  Adjacency lists preserve the order edges were supplied in;
algorithms that need another order sort on demand.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Sequence


class GraphError(Exception):
    """Structurally invalid graph or graph description."""


class GraphParseError(GraphError):
    """Malformed graph input; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    """Raised by searches that require a connected graph."""


class Graph:
    """Simple undirected graph with vertices ``1..n`` and a source vertex."""

    __slots__ = ("n", "m", "adj", "edges", "source")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], source: int = 1):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        ordered: list[tuple[int, int]] = []
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            ordered.append(key)
            adj[u].append(v)
            adj[v].append(u)
        if not 1 <= source <= n:
            raise GraphError(f"source {source} out of range 1..{n}")
        self.n = n
        self.m = len(ordered)
        self.adj = adj
        self.edges = ordered
        self.source = source

    def neighbors(self, v: int) -> list[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def with_source(self, source: int) -> "Graph":
        """Same graph, different start vertex."""
        return Graph(self.n, self.edges, source)

    def validate(self) -> None:
        """Check the structural invariants; raises GraphError on violation."""
        degree_sum = 0
        for v in range(1, self.n + 1):
            nbrs = self.adj[v]
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"duplicate neighbor in adjacency of {v}")
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            degree_sum += len(nbrs)
            for w in nbrs:
                if v not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency: {w} in N({v}) only")
        if degree_sum != 2 * self.m:
            raise GraphError(
                f"degree sum {degree_sum} does not equal 2m = {2 * self.m}"
            )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, source={self.source})"


def is_connected(g: Graph) -> bool:
    """True iff every pair of distinct vertices is joined by a path."""
    if g.n == 1:
        return True
    seen = [False] * (g.n + 1)
    seen[1] = True
    stack = [1]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _is_comment(line: str) -> bool:
    return line.startswith("#") or line.startswith("c ") or line == "c"


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    Each non-comment line is ``u v`` with 1-based integer ids.  An optional
    ``n <count>`` header fixes the vertex count (it must not be smaller
    than the largest id used) and an optional ``s <vertex>`` line picks the
    source (default 1).  Lines starting with ``#`` or ``c`` are comments.
    Duplicate edges collapse; self-loops are rejected.
    """
    edges: list[tuple[int, int]] = []
    header_n: int | None = None
    source: int | None = None
    max_id = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or _is_comment(line):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2:
                raise GraphParseError("header must be 'n <count>'", lineno)
            header_n = _parse_positive(parts[1], "vertex count", lineno)
            continue
        if parts[0] == "s":
            if len(parts) != 2:
                raise GraphParseError("source line must be 's <vertex>'", lineno)
            source = _parse_positive(parts[1], "source vertex", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u = _parse_positive(parts[0], "vertex id", lineno)
        v = _parse_positive(parts[1], "vertex id", lineno)
        if u == v:
            raise GraphParseError(f"self-loop {u}-{v}", lineno)
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if header_n is not None and header_n < max_id:
        raise GraphParseError(
            f"header n={header_n} is smaller than largest vertex id {max_id}"
        )
    n = header_n if header_n is not None else max_id
    if n == 0:
        raise GraphParseError("input describes no vertices")
    if source is not None and not 1 <= source <= n:
        raise GraphParseError(f"source {source} out of range 1..{n}")
    return Graph(n, edges, source if source is not None else 1)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS format: ``p edge <n> <m>`` then ``m`` lines ``e u v``.

    The declared edge count must match the number of distinct undirected
    edges after deduplication.
    """
    n: int | None = None
    declared_m: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or _is_comment(line):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate p-line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError("p-line must be 'p edge <n> <m>'", lineno)
            n = _parse_positive(parts[2], "vertex count", lineno)
            declared_m = _parse_nonnegative(parts[3], "edge count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before p-line", lineno)
            if len(parts) != 3:
                raise GraphParseError("edge line must be 'e <u> <v>'", lineno)
            u = _parse_positive(parts[1], "vertex id", lineno)
            v = _parse_positive(parts[2], "vertex id", lineno)
            if u > n or v > n:
                raise GraphParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop {u}-{v}", lineno)
            edges.append((u, v))
        else:
            raise GraphParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphParseError("missing p-line")
    distinct = len({(min(u, v), max(u, v)) for u, v in edges})
    if distinct != declared_m:
        raise GraphParseError(
            f"declared m={declared_m} but found {distinct} distinct edges"
        )
    return Graph(n, edges, 1)


def _parse_positive(token: str, what: str, lineno: int) -> int:
    value = _parse_int(token, what, lineno)
    if value < 1:
        raise GraphParseError(f"{what} must be >= 1, got {value}", lineno)
    return value


def _parse_nonnegative(token: str, what: str, lineno: int) -> int:
    value = _parse_int(token, what, lineno)
    if value < 0:
        raise GraphParseError(f"{what} must be >= 0, got {value}", lineno)
    return value


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"malformed {what}: {token!r}", lineno) from None


def format_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list format accepted by parse_edge_list."""
    lines = [f"n {g.n}", f"s {g.source}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def grid_graph(rows: int, cols: int, source: int = 1) -> Graph:
    """Grid with ``rows * cols`` vertices numbered row-major."""
    if rows < 1 or cols < 1:
        raise GraphError("grid dimensions must be positive")
    vid = lambda r, c: r * cols + c + 1
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(rows * cols, edges, source)


def path_graph(n: int, source: int = 1) -> Graph:
    if n < 1:
        raise GraphError("path length must be positive")
    return Graph(n, [(i, i + 1) for i in range(1, n)], source)


def cycle_graph(n: int, source: int = 1) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph(n, edges, source)


def clique_graph(n: int, source: int = 1) -> Graph:
    if n < 1:
        raise GraphError("clique size must be positive")
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return Graph(n, edges, source)


def random_connected_graph(
    n: int, p: float, seed: int, source: int = 1
) -> Graph:
    """Erdos-Renyi G(n, p) made connected by a random spanning forest link-up.

    Deterministic for a given (n, p, seed): the same edge set comes back
    every time.  Sparse graphs are sampled with geometric skipping so the
    cost is O(n + m), not O(n^2).
    """
    if n < 1:
        raise GraphError("vertex count must be positive")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0,1], got {p}")
    rng = random.Random(seed)
    edges = _sample_gnp_edges(n, p, rng)

    # Union-find over the sampled edges, then stitch components together
    # with uniformly chosen representatives.
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    members: dict[int, list[int]] = {}
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    for v in range(1, n + 1):
        members.setdefault(find(v), []).append(v)
    components = [members[r] for r in sorted(members)]
    rng.shuffle(components)
    merged = components[0]
    for comp in components[1:]:
        u = rng.choice(merged)
        v = rng.choice(comp)
        edges.append((u, v))
        merged.extend(comp)
    return Graph(n, edges, source)


def _sample_gnp_edges(
    n: int, p: float, rng: random.Random
) -> list[tuple[int, int]]:
    """Sample G(n, p) edges over vertices 1..n via geometric skipping."""
    edges: list[tuple[int, int]] = []
    if p <= 0.0 or n < 2:
        return edges
    if p >= 1.0:
        return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    log_q = math.log(1.0 - p)
    if log_q == 0.0:  # p below float resolution: no edge will ever appear
        return edges
    v, w = 1, -1
    while v < n:
        r = rng.random()
        w += 1 + int(math.log(1.0 - r) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w + 1, v + 1))
    return edges


def generate(kind: str, **params) -> Graph:
    """Build a graph from a family name and its parameters.

    Families: ``grid(rows, cols)``, ``path(n)``, ``cycle(n)``,
    ``clique(n)``, ``random(n, p, seed)``.  All accept ``source``.
    """
    source = params.pop("source", 1)
    try:
        if kind == "grid":
            return grid_graph(params.pop("rows"), params.pop("cols"), source)
        if kind == "path":
            return path_graph(params.pop("n"), source)
        if kind == "cycle":
            return cycle_graph(params.pop("n"), source)
        if kind == "clique":
            return clique_graph(params.pop("n"), source)
        if kind in ("random", "random-connected"):
            return random_connected_graph(
                params.pop("n"), params.pop("p"), params.pop("seed"), source
            )
    except KeyError as exc:
        raise GraphError(f"family {kind!r} missing parameter {exc}") from None
    raise GraphError(f"unknown graph family {kind!r}")
