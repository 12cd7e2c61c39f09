"""Neighborhood polynomial by peeling vertices of small residual degree.

Removing a vertex ``v`` from ``G`` changes the polynomial by a correction term
that only depends on the neighbors of ``v`` and their common neighborhoods in
``G - v``. Peeling every vertex but the last and adding the corrections to the
base value 1 of a single vertex yields ``N(G, x)``. The cost of one step is
exponential only in the residual degree of the removed vertex, so graphs of
bounded degeneracy are handled in polynomial time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple, Optional, Sequence

from .errors import CostGuardExceeded, GraphError
from .graph import Graph, _check_vertex, peel
from .polynomial import Polynomial

DEFAULT_DEGREE_GUARD = 25
DEFAULT_TERM_BUDGET = 1_000_000


@dataclass(frozen=True)
class ReductionStep:
    vertex: int
    degree: int
    correction: Polynomial

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "degree": self.degree, "X": self.correction.to_json()}


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    degeneracy_observed: int = 0

    def total(self) -> Polynomial:
        acc = Polynomial((1,))
        for step in self.steps:
            acc = acc + step.correction
        return acc

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


class CostEstimate(NamedTuple):
    degeneracy: int
    term_count: int


def _correction_counts(nbr_sets: Sequence[set], v: int) -> tuple[dict, dict]:
    """Inclusion-exclusion tallies for removing ``v``.

    ``nbr_sets`` are the neighborhoods (still containing ``v``) of the
    neighbors of ``v``. Returns ``signed`` mapping a common-neighborhood size
    ``c`` in ``G - v`` to the signed number of subsets with that size, and
    ``empty`` mapping ``|U|`` to the number of subsets ``U`` whose common
    neighborhood in ``G - v`` is empty.
    """
    signed: dict[int, int] = {}
    empty: dict[int, int] = {}
    d = len(nbr_sets)

    def visit(start: int, cur, size: int) -> None:
        c = len(cur) - 1  # v is always a common neighbor; drop it
        if c == 0:
            # every extension of U also has an empty common neighborhood:
            # their signed x-terms cancel, their A-terms sum to x^|U| (1+x)^r
            r = d - start
            if r == 0:
                signed[0] = signed.get(0, 0) + (1 if size & 1 else -1)
            for j in range(r + 1):
                empty[size + j] = empty.get(size + j, 0) + comb(r, j)
            return
        signed[c] = signed.get(c, 0) + (1 if size & 1 else -1)
        for i in range(start, d):
            visit(i + 1, cur & nbr_sets[i], size + 1)

    for i in range(d):
        visit(i + 1, nbr_sets[i], 1)
    return signed, empty


def _tallies_to_coeffs(signed: dict, empty: dict) -> list[int]:
    top = max([c + 1 for c in signed] + [s for s in empty] + [0])
    out = [0] * (top + 1)
    for c, k in signed.items():
        if k:
            for i in range(c + 1):
                out[i + 1] += k * comb(c, i)
    for s, k in empty.items():
        out[s] += k
    return out


def removal_correction(G: Graph, v: int) -> Polynomial:
    """N(G) - N(G - v), computed from the neighborhood of ``v`` alone."""
    _check_vertex(G, v)
    nbr_sets = [G.adjacency[u] for u in sorted(G.adjacency[v])]
    return Polynomial(_tallies_to_coeffs(*_correction_counts(nbr_sets, v)))


def estimate_cost(G: Graph) -> CostEstimate:
    """Degeneracy and the number of subset terms the peeling will evaluate."""
    _, residual = peel(G)
    return CostEstimate(max(residual, default=0), sum((1 << d) - 1 for d in residual))


def _guard(residual: Sequence[int], degree_guard: int, term_budget: Optional[int]) -> None:
    worst = max(residual, default=0)
    terms = sum((1 << d) - 1 for d in residual)
    if worst > degree_guard:
        raise CostGuardExceeded(
            f"reduction refused: a peeling step has residual degree {worst} "
            f"> degree guard {degree_guard} (estimated {terms} subset terms)"
        )
    if term_budget is not None and terms > term_budget:
        raise CostGuardExceeded(
            f"reduction refused: estimated {terms} subset terms exceed the budget "
            f"{term_budget} (max residual degree {worst})"
        )


def check_cost(G: Graph, degree_guard: int = DEFAULT_DEGREE_GUARD,
               term_budget: Optional[int] = DEFAULT_TERM_BUDGET) -> CostEstimate:
    """Raise :class:`CostGuardExceeded` if the reduction would be too expensive."""
    _, residual = peel(G)
    _guard(residual, degree_guard, term_budget)
    return CostEstimate(max(residual, default=0), sum((1 << d) - 1 for d in residual))


def _residual_degrees(G: Graph, order: Sequence[int]) -> list[int]:
    alive = [True] * G.n
    deg = G.degrees()
    out = []
    for v in order:
        out.append(deg[v])
        alive[v] = False
        for u in G.adjacency[v]:
            if alive[u]:
                deg[u] -= 1
    return out


def neighborhood_polynomial_reduction(
    G: Graph,
    degree_guard: int = DEFAULT_DEGREE_GUARD,
    term_budget: Optional[int] = DEFAULT_TERM_BUDGET,
    order: Optional[Sequence[int]] = None,
    keep_trace: bool = True,
) -> tuple[Polynomial, ReductionTrace]:
    """Compute N(G, x) as 1 plus the sum of the peeling corrections.

    By default vertices are peeled in min-degree order (ties to the lowest
    index). An explicit ``order`` (a permutation of the vertices) may be given
    instead; the result does not depend on it.
    """
    if order is None:
        order, residual = peel(G)
    else:
        order = list(order)
        if sorted(order) != list(G.vertices()):
            raise GraphError("peeling order must be a permutation of the vertices")
        residual = _residual_degrees(G, order)
    _guard(residual, degree_guard, term_budget)

    trace = ReductionTrace(degeneracy_observed=max(residual, default=0))
    if G.n == 0:
        return Polynomial((1,)), trace

    adj = [set(a) for a in G.adjacency]
    total = [1]
    for v in order[:-1]:
        nbr_sets = [adj[u] for u in sorted(adj[v])]
        coeffs = _tallies_to_coeffs(*_correction_counts(nbr_sets, v))
        if len(coeffs) > len(total):
            total.extend([0] * (len(coeffs) - len(total)))
        for k, c in enumerate(coeffs):
            total[k] += c
        if keep_trace:
            trace.steps.append(ReductionStep(v, len(nbr_sets), Polynomial(coeffs)))
        for u in adj[v]:
            adj[u].discard(v)
        adj[v] = set()
    result = Polynomial(total)
    if not result.is_nonnegative():
        raise AssertionError(f"negative coefficient in reduction result {result}")
    return result, trace
