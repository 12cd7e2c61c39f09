"""Method selection: reduction when its cost guard passes, else the oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CostGuardExceeded, LimitExceeded
from .graph import Graph
from .oracle import DEFAULT_ORACLE_LIMIT, neighborhood_polynomial_oracle
from .polynomial import Polynomial
from .reduction import (
    DEFAULT_DEGREE_GUARD,
    DEFAULT_TERM_BUDGET,
    ReductionTrace,
    check_cost,
    neighborhood_polynomial_reduction,
)

METHODS = ("auto", "oracle", "reduction")


@dataclass(frozen=True)
class Limits:
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    degree_guard: int = DEFAULT_DEGREE_GUARD
    term_budget: Optional[int] = DEFAULT_TERM_BUDGET


@dataclass(frozen=True)
class Solution:
    polynomial: Polynomial
    method: str
    trace: Optional[ReductionTrace] = None


def solve(G: Graph, method: str = "auto", limits: Limits = Limits()) -> Solution:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "oracle":
        return Solution(neighborhood_polynomial_oracle(G, limits.oracle_limit), "oracle")
    if method == "reduction":
        poly, trace = neighborhood_polynomial_reduction(G, limits.degree_guard, limits.term_budget)
        return Solution(poly, "reduction", trace)
    try:
        check_cost(G, limits.degree_guard, limits.term_budget)
    except CostGuardExceeded as exc:
        if G.n <= limits.oracle_limit:
            return Solution(neighborhood_polynomial_oracle(G, limits.oracle_limit), "oracle")
        raise CostGuardExceeded(
            f"{exc}; oracle also unavailable (n={G.n} > oracle limit {limits.oracle_limit})"
        ) from None
    poly, trace = neighborhood_polynomial_reduction(G, limits.degree_guard, limits.term_budget)
    return Solution(poly, "reduction", trace)


def neighborhood_polynomial(G: Graph, method: str = "auto", limits: Limits = Limits()) -> Polynomial:
    return solve(G, method, limits).polynomial


def auto_solver(limits: Limits = Limits()):
    """A ``Graph -> Polynomial`` callable using the auto strategy."""
    return lambda G: solve(G, "auto", limits).polynomial


__all__ = ["Limits", "Solution", "solve", "neighborhood_polynomial", "auto_solver", "LimitExceeded"]
