"""Domination polynomial, by the complement identity and by brute force.

A set is dominating in ``G`` exactly when it is not contained in any open
neighborhood of the complement, so ``D(G) = (1+x)^n - N(complement(G))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import OracleLimitExceeded
from .graph import Graph, complement
from .oracle import DEFAULT_ORACLE_LIMIT
from .polynomial import Polynomial, binomial_power
from .solve import Limits, solve


@dataclass(frozen=True)
class DominationResult:
    polynomial: Polynomial
    method: str  # "complement_identity" or "brute_force"
    strategy: Optional[str] = None  # how N(complement) was obtained


def domination_via_complement(G: Graph, limits: Limits = Limits()) -> DominationResult:
    if G.n == 0:
        # the empty set dominates the empty graph; the identity would give 0
        # because N of the order-0 graph is taken to be 1
        return DominationResult(Polynomial((1,)), "complement_identity", None)
    sol = solve(complement(G), "auto", limits)
    return DominationResult(binomial_power(G.n) - sol.polynomial, "complement_identity", sol.method)


def domination_oracle(G: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> Polynomial:
    """Count every vertex subset whose closed neighborhood is all of ``V``."""
    n = G.n
    if n > limit:
        raise OracleLimitExceeded(
            f"domination oracle refuses graphs with more than {limit} vertices (got n={n})"
        )
    closed = [m | (1 << v) for v, m in enumerate(G.masks)]
    # cover[S] = union of closed neighborhoods of S, filled by doubling over bits
    cover = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        half = 1 << v
        cover[half:2 * half] = cover[:half] | closed[v]
    full = (1 << n) - 1
    winners = np.flatnonzero(cover == full)
    sizes = np.bitwise_count(winners.astype(np.uint64)).astype(np.int64)
    return Polynomial(np.bincount(sizes, minlength=1).tolist())


def domination_polynomial(G: Graph, method: str = "complement_identity",
                          limits: Limits = Limits()) -> DominationResult:
    if method == "complement_identity":
        return domination_via_complement(G, limits)
    if method == "brute_force":
        return DominationResult(domination_oracle(G, limits.oracle_limit), "brute_force")
    raise ValueError(f"unknown domination method {method!r}")
