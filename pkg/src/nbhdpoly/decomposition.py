"""Closed-form rules relating N(G, x) to the polynomials of smaller or related graphs.

Each rule checks its preconditions and raises :class:`PreconditionError`
when the instance is not covered. Split rules take the cut as a caller-supplied
certificate; they validate it but never search for one.

Two rules exist in a ``literal`` and a ``corrected`` mode: the general edge
insertion rule and the matching-cut rule. The literal forms are kept verbatim
and are wrong on small instances (see the regression tests); the corrected
forms agree with brute force everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .graph import (
    Graph,
    _check_vertex,
    connected_components,
    from_edge_list,
    has_isolated_vertex,
    induced_subgraph,
    is_independent,
    remove_edges,
    remove_vertex,
    remove_vertices,
)
from .errors import GraphError, PreconditionError
from .oracle import is_in_complex
from .polynomial import ONE, X, Polynomial, binomial_power
from .solve import auto_solver

Solver = Callable[[Graph], Polynomial]

SUBSET_GUARD = 20


class TheoremMode(str, Enum):
    LITERAL = "literal"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class SplitCertificate:
    """A validated cut together with the two split components.

    ``parts`` holds ``(graph, old_to_new)`` pairs; the maps send vertices of
    the original graph to their index inside each part.
    """

    kind: str
    cut: tuple
    parts: tuple


def _solver(solver: Optional[Solver]) -> Solver:
    return solver if solver is not None else auto_solver()


def _check_neighborhood_poly(p: Polynomial) -> None:
    if p[0] != 1:
        raise PreconditionError(f"not a neighborhood polynomial (constant term {p[0]} != 1): {p}")


def _subsets(items: Sequence, nonempty: bool = True):
    for r in range(1 if nonempty else 0, len(items) + 1):
        yield from combinations(items, r)


def _intersection(sets: Iterable[frozenset]) -> frozenset:
    it = iter(sets)
    acc = next(it)
    for s in it:
        acc = acc & s
    return acc


# graph products

def disjoint_union_poly(N1: Polynomial, N2: Polynomial) -> Polynomial:
    _check_neighborhood_poly(N1)
    _check_neighborhood_poly(N2)
    return N1 + N2 - 1


def join_poly(N1: Polynomial, n1: int, N2: Polynomial, n2: int) -> Polynomial:
    if n1 < 1 or n2 < 1:
        raise PreconditionError(
            f"join rule needs two nonempty operands (got orders {n1} and {n2}); "
            "an empty operand makes the formula return (1+x)^n instead of N(G)"
        )
    _check_neighborhood_poly(N1)
    _check_neighborhood_poly(N2)
    return binomial_power(n1) * N2 + binomial_power(n2) * N1 - N1 * N2


def cartesian_poly(G1: Graph, G2: Graph, solver: Optional[Solver] = None) -> Polynomial:
    """N(G1 x G2) from the factors' polynomials, orders, sizes and degrees."""
    for name, G in (("first", G1), ("second", G2)):
        if G.n == 0 or has_isolated_vertex(G):
            raise PreconditionError(
                f"Cartesian rule needs factors without isolated vertices ({name} factor violates this)"
            )
    solve = _solver(solver)
    N1, N2 = solve(G1), solve(G2)
    n1, n2 = G1.n, G2.n
    s1 = sum((binomial_power(d) - 1 for d in G1.degrees()), Polynomial())
    s2 = sum((binomial_power(d) - 1 for d in G2.degrees()), Polynomial())
    # the sum over product vertices (u, v) factors into s1 * s2
    return (1 + n1 * (N2 - 1) + n2 * (N1 - 1) + s1 * s2
            - Polynomial((0, n1 * n2)) - Polynomial((0, 0, 2 * G1.m * G2.m)))


# cut vertex

def cut_vertex_split(G: Graph, v: int) -> SplitCertificate:
    """Split at cut vertex ``v``: the first component of ``G - v`` touching ``v`` vs the rest."""
    _check_vertex(G, v)
    rest, index = remove_vertex(G, v)
    back = {new: old for old, new in index.items()}
    nbrs = G.adjacency[v]
    touching = []
    for comp in connected_components(rest):
        orig = frozenset(back[u] for u in comp)
        if orig & nbrs:
            touching.append(orig)
    if len(touching) < 2:
        raise PreconditionError(f"vertex {v} is not a cut vertex")
    side1 = touching[0] | {v}
    side2 = (frozenset(G.vertices()) - touching[0])
    return SplitCertificate("cut_vertex", (v,), (induced_subgraph(G, side1), induced_subgraph(G, side2)))


def cut_vertex_split_poly(G: Graph, v: int, solver: Optional[Solver] = None) -> Polynomial:
    solve = _solver(solver)
    cert = cut_vertex_split(G, v)
    (G1, map1), (G2, map2) = cert.parts
    v1, v2 = map1[v], map2[v]
    N1 = solve(G1)
    try:
        N2 = cut_vertex_split_poly(G2, v2, solve)
    except PreconditionError:
        N2 = solve(G2)
    return (N1 + N2 - binomial_power(1)
            + (binomial_power(G1.degree(v1)) - 1) * (binomial_power(G2.degree(v2)) - 1))


# independent vertex cut

def independent_cut_split(G: Graph, W: Iterable[int]) -> SplitCertificate:
    """Split along an independent separator ``W``.

    When ``G - W`` has more than two components the first one is split off
    against the union of the others.
    """
    W = frozenset(W)
    for w in W:
        _check_vertex(G, w)
    if not W:
        raise PreconditionError("cut set must be nonempty")
    if not is_independent(G, W):
        raise PreconditionError(f"cut set {sorted(W)} is not independent")
    rest, index = remove_vertices(G, W)
    back = {new: old for old, new in index.items()}
    comps = [frozenset(back[u] for u in c) for c in connected_components(rest)]
    if len(comps) < 2:
        raise PreconditionError(f"removing {sorted(W)} leaves {len(comps)} component(s), need at least 2")
    side1 = comps[0] | W
    side2 = frozenset(G.vertices()) - comps[0]
    return SplitCertificate("independent_cut", tuple(sorted(W)),
                            (induced_subgraph(G, side1), induced_subgraph(G, side2)))


def independent_cut_split_poly(G: Graph, W: Iterable[int], solver: Optional[Solver] = None) -> Polynomial:
    solve = _solver(solver)
    cert = independent_cut_split(G, W)
    W = cert.cut
    if len(W) > SUBSET_GUARD:
        raise PreconditionError(f"cut set of size {len(W)} exceeds subset guard {SUBSET_GUARD}")
    (G1, map1), (G2, map2) = cert.parts
    result = solve(G1) + solve(G2)
    for U in _subsets(W, nonempty=False):
        if U:
            c1 = _intersection(G1.adjacency[map1[u]] for u in U)
            c2 = _intersection(G2.adjacency[map2[u]] for u in U)
        else:
            c1, c2 = frozenset(G1.vertices()), frozenset(G2.vertices())
        if c1 and c2:
            result = result - Polynomial.monomial(len(U))
        if U:
            term = (binomial_power(len(c1)) - 1) * (binomial_power(len(c2)) - 1)
            result = result + term if len(U) % 2 == 1 else result - term
    return result


# matching cut

def _parse_edges(F: Iterable[Sequence[int]]) -> list[tuple[int, int]]:
    return [(int(a), int(b)) for a, b in F]


def matching_cut_split(G: Graph, F: Iterable[Sequence[int]]) -> SplitCertificate:
    """Validate a matching cut and build ``H' = H + F`` and ``K' = K + F``.

    Each part is returned with a map from original vertex ids to part ids.
    The certificate's ``cut`` holds the edges oriented as ``(a, b)`` with
    ``a`` in ``H`` and ``b`` in ``K``.
    """
    F = _parse_edges(F)
    if not F:
        raise PreconditionError("matching cut must contain at least one edge")
    ends = [x for e in F for x in e]
    for x in ends:
        _check_vertex(G, x)
    for a, b in F:
        if not G.has_edge(a, b):
            raise PreconditionError(f"({a}, {b}) is not an edge")
    if len(set(ends)) != len(ends):
        raise PreconditionError("edge set is not a matching (shared endpoint)")
    rest = remove_edges(G, F)
    comps = connected_components(rest)
    if len(comps) != 2:
        raise PreconditionError(
            f"removing the edges leaves {len(comps)} component(s); a matching cut of a "
            "connected graph must leave exactly 2"
        )
    H = comps[0] if F[0][0] in comps[0] else comps[1]
    K = comps[1] if H is comps[0] else comps[0]
    oriented = []
    for a, b in F:
        if a in H and b in K:
            oriented.append((a, b))
        elif b in H and a in K:
            oriented.append((b, a))
        else:
            raise PreconditionError(f"edge ({a}, {b}) does not cross the cut, so the cut is not minimal")
    A = frozenset(a for a, _ in oriented)
    B = frozenset(b for _, b in oriented)

    def side(core: frozenset, extra: frozenset) -> tuple[Graph, dict]:
        verts = sorted(core | extra)
        index = {old: new for new, old in enumerate(verts)}
        edges = [(index[u], index[w]) for u, w in rest.edges() if u in core and w in core]
        edges += [(index[a], index[b]) for a, b in oriented]
        return from_edge_list(len(verts), edges), index

    return SplitCertificate("matching_cut", tuple(oriented), (side(H, B), side(K, A)))


def matching_cut_poly(G: Graph, F: Iterable[Sequence[int]],
                      mode: TheoremMode = TheoremMode.CORRECTED,
                      solver: Optional[Solver] = None) -> Polynomial:
    mode = TheoremMode(mode)
    solve = _solver(solver)
    cert = matching_cut_split(G, F)
    (Hp, hmap), (Kp, kmap) = cert.parts
    base = solve(Hp) + solve(Kp)
    f = len(cert.cut)
    if mode is TheoremMode.LITERAL:
        return base - Polynomial((1, 2 * f))
    if 2 * f > SUBSET_GUARD:
        raise PreconditionError(f"matching of size {f} exceeds subset guard")
    # every set shared by both complexes lies inside A u B
    shared = sorted(x for e in cert.cut for x in e)
    counts = [0] * (len(shared) + 1)
    for S in _subsets(shared, nonempty=False):
        if is_in_complex(Hp, [hmap[s] for s in S]) and is_in_complex(Kp, [kmap[s] for s in S]):
            counts[len(S)] += 1
    return base - Polynomial(counts)


# edge insertion

def has_length3_path(G: Graph, u: int, v: int) -> bool:
    """True iff some path u - w - y - v with four distinct vertices exists."""
    for w in G.adjacency[u]:
        if w == v:
            continue
        for y in G.adjacency[v]:
            if y in (u, w):
                continue
            if G.has_edge(w, y):
                return True
    return False


def _check_non_edge(G: Graph, u: int, v: int) -> None:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise PreconditionError("edge endpoints must differ")
    if G.has_edge(u, v):
        raise PreconditionError(f"edge ({u}, {v}) already present")


def edge_addition_restricted(G: Graph, u: int, v: int, solver: Optional[Solver] = None,
                             base: Optional[Polynomial] = None) -> Polynomial:
    """N(G + uv) when no path with exactly three edges joins ``u`` and ``v``.

    Both endpoints must have a neighbor: if ``v`` is isolated, the singleton
    ``{v}`` becomes a new member once ``u`` is adjacent to it, and the formula
    has no term for that.
    """
    _check_non_edge(G, u, v)
    if not G.adjacency[u] or not G.adjacency[v]:
        raise PreconditionError("endpoints must not be isolated; use vertex_attachment_poly instead")
    if has_length3_path(G, u, v):
        raise PreconditionError(
            f"a path of length 3 joins {u} and {v}; use edge_addition_general instead"
        )
    N = base if base is not None else _solver(solver)(G)
    return (N + X * (binomial_power(G.degree(u)) - 1)
            + X * (binomial_power(G.degree(v)) - 1))


def _insertion_sum(G: Graph, near: int, far: int, mode: TheoremMode) -> Polynomial:
    # subsets U of N(near) that, together with far, gain `near` as a new common neighbor
    nbrs = sorted(G.adjacency[near])
    if len(nbrs) > SUBSET_GUARD:
        raise PreconditionError(f"degree {len(nbrs)} of vertex {near} exceeds subset guard")
    far_nbrs = G.adjacency[far]
    counts = [0] * (len(nbrs) + 2)
    for U in _subsets(nbrs):
        if mode is TheoremMode.LITERAL:
            fresh = not (set(U) & far_nbrs)
        else:
            fresh = not (_intersection(G.adjacency[w] for w in U) & far_nbrs)
        if fresh:
            counts[len(U) + 1] += 1
    return Polynomial(counts)


def edge_addition_general(G: Graph, u1: int, u2: int,
                          mode: TheoremMode = TheoremMode.CORRECTED,
                          solver: Optional[Solver] = None,
                          base: Optional[Polynomial] = None) -> Polynomial:
    mode = TheoremMode(mode)
    _check_non_edge(G, u1, u2)
    if not G.adjacency[u1] or not G.adjacency[u2]:
        raise PreconditionError("endpoints must not be isolated; use vertex_attachment_poly instead")
    N = base if base is not None else _solver(solver)(G)
    return N + _insertion_sum(G, u1, u2, mode) + _insertion_sum(G, u2, u1, mode)


# vertex attachment

def _attachment_delta(nbr_sets: Sequence[set]) -> Polynomial:
    """Change of N when a new vertex is attached to vertices with these neighborhoods."""
    d = len(nbr_sets)
    counts = [0] * (d + 2)
    signed: dict[int, int] = {}
    for W in _subsets(range(d)):
        common = _intersection(nbr_sets[i] for i in W)
        sign = 1 if len(W) % 2 == 1 else -1
        signed[len(common)] = signed.get(len(common), 0) + sign
        if not common:
            counts[len(W)] += 1
    delta = Polynomial(counts)
    for c, k in signed.items():
        if k:
            delta = delta + k * X * binomial_power(c)
    return delta


def vertex_attachment_poly(G: Graph, U: Iterable[int], solver: Optional[Solver] = None,
                           base: Optional[Polynomial] = None) -> Polynomial:
    """N of ``G`` plus a new vertex adjacent to exactly ``U``."""
    U = sorted(set(U))
    for u in U:
        _check_vertex(G, u)
    if len(U) > SUBSET_GUARD:
        raise PreconditionError(f"attachment set of size {len(U)} exceeds subset guard {SUBSET_GUARD}")
    N = base if base is not None else _solver(solver)(G)
    if not U:
        return N
    return N + _attachment_delta([G.adjacency[u] for u in U])


def attachment_sequence_polynomial(attach_sets: Sequence[Sequence[int]]) -> Polynomial:
    """N of the graph built by attaching vertex ``i`` to ``attach_sets[i]`` in turn.

    The polynomial is maintained incrementally with the attachment rule, so
    this never looks at the finished graph.
    """
    adj: list[set] = []
    poly = ONE
    for i, U in enumerate(attach_sets):
        U = sorted(set(U))
        if any(not (0 <= u < i) for u in U):
            raise GraphError(f"vertex {i} may only attach to earlier vertices, got {U}")
        if U:
            poly = poly + _attachment_delta([adj[u] for u in U])
        adj.append(set(U))
        for u in U:
            adj[u].add(i)
    return poly
