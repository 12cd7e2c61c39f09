"""Named graph families and seeded random graphs."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import GraphError
from .graph import Graph, cartesian_product_graph, from_edge_list, remove_vertex


def _positive(name: str, k: int, minimum: int = 1) -> None:
    if not isinstance(k, int) or k < minimum:
        raise GraphError(f"{name} needs size >= {minimum}, got {k!r}")


def empty(k: int) -> Graph:
    if k < 0:
        raise GraphError("edgeless graph needs size >= 0")
    return from_edge_list(k, [])


def path(k: int) -> Graph:
    _positive("path", k)
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    _positive("cycle", k, 3)
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    _positive("complete", k)
    return from_edge_list(k, combinations(range(k), 2))


def star(k: int) -> Graph:
    """K_{1,k}: center 0 and leaves 1..k."""
    _positive("star", k)
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def ladder(n: int) -> Graph:
    """P2 x Pn: rows ``0..n-1`` and ``n..2n-1``, rungs ``(i, n+i)``."""
    _positive("ladder", n, 2)
    return cartesian_product_graph(path(2), path(n))


def modified_ladder(n: int) -> Graph:
    """Ladder with corner vertex 0 removed; 2n-1 vertices, one of degree 1."""
    _positive("modified_ladder", n, 2)
    return remove_vertex(ladder(n), 0)[0]


def grid(a: int, b: int) -> Graph:
    _positive("grid", a)
    _positive("grid", b)
    return cartesian_product_graph(path(a), path(b))


def prism(k: int) -> Graph:
    """C_k x P2; vertex ``2i`` is on the first cycle, ``2i+1`` its rung partner."""
    _positive("prism", k, 3)
    return cartesian_product_graph(cycle(k), path(2))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, edges)


def random_degenerate_attachments(n: int, k: int, seed: int) -> list[list[int]]:
    """Attachment sets for building a k-degenerate graph one vertex at a time.

    Vertex ``i`` is attached to ``min(k, i)`` distinct earlier vertices.
    """
    _positive("degenerate", n)
    if k < 0:
        raise GraphError("degeneracy bound must be nonnegative")
    rng = random.Random(seed)
    return [sorted(rng.sample(range(i), min(k, i))) for i in range(n)]


def random_degenerate(n: int, k: int, seed: int = 0) -> Graph:
    attach = random_degenerate_attachments(n, k, seed)
    return from_edge_list(n, [(u, i) for i, us in enumerate(attach) for u in us])


FAMILIES = {
    "empty": (1, empty),
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "star": (1, star),
    "ladder": (1, ladder),
    "modified_ladder": (1, modified_ladder),
    "grid": (2, grid),
    "prism": (1, prism),
    "degenerate": (3, random_degenerate),
}


def generate(spec: str) -> Graph:
    """Build a graph from a ``family:arg[,arg]`` spec such as ``ladder:5`` or ``grid:3x4``.

    ``degenerate:n,k[,seed]`` builds a random k-degenerate graph.
    """
    family, _, args = spec.partition(":")
    family = family.strip().lower().replace("-", "_")
    if family not in FAMILIES:
        raise GraphError(f"unknown graph family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    arity, build = FAMILIES[family]
    try:
        values = [int(a) for a in args.replace("x", ",").split(",") if a.strip()]
    except ValueError:
        raise GraphError(f"bad arguments in generator spec {spec!r}") from None
    if family == "degenerate" and len(values) == 2:
        values.append(0)
    if len(values) != arity:
        raise GraphError(f"{family} expects {arity} integer argument(s), got {spec!r}")
    return build(*values)
