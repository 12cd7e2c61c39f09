"""Immutable simple undirected graphs on dense vertex indices ``0..n-1``.

All operations that "modify" a graph return a new :class:`Graph`; vertex
removal re-indexes the survivors densely and hands back the old-to-new map.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Sequence

from .errors import GraphError


class Graph:
    """Simple undirected graph stored as a tuple of neighbor frozensets."""

    __slots__ = ("_adj", "_m", "_masks")

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        n = len(adj)
        total = 0
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not (0 <= u < n):
                    raise GraphError(f"neighbor {u} of vertex {v} out of range [0, {n})")
                if v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += len(nbrs)
        self._adj = adj
        self._m = total // 2
        self._masks = None

    @classmethod
    def _trusted(cls, adj: tuple) -> Graph:
        # skips validation; callers guarantee symmetry and irreflexivity
        g = cls.__new__(cls)
        g._adj = adj
        g._m = sum(len(a) for a in adj) // 2
        g._masks = None
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[frozenset, ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``u`` set iff ``u`` is adjacent)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in nbrs) for nbrs in self._adj)
        return self._masks

    def vertices(self) -> range:
        return range(len(self._adj))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self._adj) for v in sorted(nbrs) if u < v]

    def isolated_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self._adj) if not a]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def _check_vertex(G: Graph, v: int) -> None:
    if not isinstance(v, int) or not (0 <= v < G.n):
        raise GraphError(f"vertex {v!r} out of range [0, {G.n})")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; rejects loops, duplicates and bad endpoints."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj: list[set] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph._trusted(tuple(frozenset(a) for a in adj))


def neighborhood(G: Graph, v: int) -> frozenset:
    _check_vertex(G, v)
    return G.adjacency[v]


def common_neighborhood(G: Graph, S: Iterable[int]) -> frozenset:
    """Intersection of the open neighborhoods of ``S``; the whole vertex set when ``S`` is empty."""
    result = None
    for s in S:
        _check_vertex(G, s)
        result = G.adjacency[s] if result is None else result & G.adjacency[s]
    if result is None:
        return frozenset(G.vertices())
    return result


def peel(G: Graph) -> tuple[list[int], list[int]]:
    """Min-degree peeling of all vertices, ties broken by lowest index.

    Returns the removal order and the residual degree of each vertex at the
    moment it was removed.
    """
    deg = G.degrees()
    removed = [False] * G.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order: list[int] = []
    residual: list[int] = []
    adj = G.adjacency
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        residual.append(d)
        for u in adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order, residual


def degeneracy_ordering(G: Graph) -> tuple[list[int], int]:
    order, residual = peel(G)
    return order, max(residual, default=0)


def degeneracy(G: Graph) -> int:
    return degeneracy_ordering(G)[1]


def connected_components(G: Graph) -> list[frozenset]:
    """Components in order of their smallest vertex."""
    seen = [False] * G.n
    comps = []
    for s in G.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices``, re-indexed in increasing old-index order."""
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(G, v)
    index = {old: new for new, old in enumerate(keep)}
    adj = tuple(frozenset(index[u] for u in G.adjacency[old] if u in index) for old in keep)
    return Graph._trusted(adj), index


def remove_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    _check_vertex(G, v)
    return induced_subgraph(G, (u for u in G.vertices() if u != v))


def remove_vertices(G: Graph, W: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(W)
    for w in drop:
        _check_vertex(G, w)
    return induced_subgraph(G, (u for u in G.vertices() if u not in drop))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if G.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(G.adjacency)
    adj[u] = adj[u] | {v}
    adj[v] = adj[v] | {u}
    return Graph._trusted(tuple(adj))


def remove_edges(G: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [set(a) for a in G.adjacency]
    for u, v in edges:
        if v not in adj[u]:
            raise GraphError(f"edge ({u}, {v}) not present")
        adj[u].discard(v)
        adj[v].discard(u)
    return Graph._trusted(tuple(frozenset(a) for a in adj))


def attach_vertex(G: Graph, U: Iterable[int]) -> Graph:
    """Add a new vertex (index ``n``) adjacent to exactly the vertices of ``U``."""
    U = frozenset(U)
    for u in U:
        _check_vertex(G, u)
    n = G.n
    adj = [a | {n} if v in U else a for v, a in enumerate(G.adjacency)]
    adj.append(U)
    return Graph._trusted(tuple(adj))


def complement(G: Graph) -> Graph:
    everyone = frozenset(G.vertices())
    return Graph._trusted(tuple(everyone - a - {v} for v, a in enumerate(G.adjacency)))


def disjoint_union_graph(G1: Graph, G2: Graph) -> Graph:
    off = G1.n
    adj = G1.adjacency + tuple(frozenset(u + off for u in a) for a in G2.adjacency)
    return Graph._trusted(adj)


def join_graph(G1: Graph, G2: Graph) -> Graph:
    n1, n2 = G1.n, G2.n
    left = frozenset(range(n1))
    right = frozenset(range(n1, n1 + n2))
    adj = tuple(a | right for a in G1.adjacency)
    adj += tuple(frozenset(u + n1 for u in a) | left for a in G2.adjacency)
    return Graph._trusted(adj)


def cartesian_product_graph(G1: Graph, G2: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` gets index ``a * n2 + b``."""
    n2 = G2.n
    adj = []
    for a in G1.vertices():
        for b in G2.vertices():
            nbrs = {a * n2 + b2 for b2 in G2.adjacency[b]}
            nbrs.update(a2 * n2 + b for a2 in G1.adjacency[a])
            adj.append(frozenset(nbrs))
    return Graph._trusted(tuple(adj))


def has_isolated_vertex(G: Graph) -> bool:
    return any(not a for a in G.adjacency)


def is_independent(G: Graph, W: Iterable[int]) -> bool:
    W = set(W)
    return all(not (G.adjacency[w] & W) for w in W)


# edge-list text format: "n m" header, then one "u v" pair per line, '#' comments

def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((int(parts[0]), int(parts[1]), lineno))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise GraphError("edge list is empty: missing 'n m' header")
    n, m, _ = rows[0]
    edges = [(u, v) for u, v, _ in rows[1:]]
    if n < 0 or m < 0:
        raise GraphError("header values must be nonnegative")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges)


def read_edge_list(path) -> Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    return parse_edge_list(text)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(G))
