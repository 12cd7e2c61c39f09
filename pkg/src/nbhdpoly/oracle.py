"""Brute-force neighborhood complex and neighborhood polynomial.

This is the referee for every other route: it materializes the family of all
vertex subsets that lie inside some open neighborhood and counts them by size.
Members are vertex bitmasks (bit ``u`` set iff vertex ``u`` is in the set).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

import numpy as np

from .errors import OracleLimitExceeded
from .graph import Graph, _check_vertex
from .polynomial import Polynomial

DEFAULT_ORACLE_LIMIT = 20

VertexSetLike = Union[int, Iterable[int]]


def to_mask(S: VertexSetLike) -> int:
    if isinstance(S, int):
        return S
    mask = 0
    for v in S:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of vertex subsets over the ground set ``range(n)``."""

    n: int
    members: np.ndarray  # sorted, unique int64 bitmasks

    def __len__(self) -> int:
        return int(self.members.size)

    def __contains__(self, S) -> bool:
        mask = to_mask(S)
        i = int(np.searchsorted(self.members, mask))
        return i < self.members.size and int(self.members[i]) == mask

    def __iter__(self) -> Iterator[frozenset]:
        return (from_mask(int(m)) for m in self.members)

    def masks(self) -> list[int]:
        return [int(m) for m in self.members]

    def size_counts(self) -> list[int]:
        if not self.members.size:
            return []
        sizes = np.bitwise_count(self.members.astype(np.uint64)).astype(np.int64)
        return np.bincount(sizes).tolist()


def _submasks(mask: int) -> np.ndarray:
    bits = [i for i in range(mask.bit_length()) if mask >> i & 1]
    idx = np.arange(1 << len(bits), dtype=np.int64)
    out = np.zeros_like(idx)
    for j, pos in enumerate(bits):
        out |= ((idx >> j) & 1) << pos
    return out


def _check_limit(G: Graph, limit: int) -> None:
    if G.n > limit:
        raise OracleLimitExceeded(
            f"oracle refuses graphs with more than {limit} vertices (got n={G.n}); "
            f"raise the oracle limit explicitly if the cost is acceptable"
        )


def complex_enumerate(G: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> SetFamily:
    """Every vertex subset contained in some open neighborhood of ``G``."""
    _check_limit(G, limit)
    if G.n == 0:
        return SetFamily(0, np.zeros(0, dtype=np.int64))
    present = np.zeros(1 << G.n, dtype=bool)
    present[0] = True
    masks = G.masks
    done: list[int] = []
    for v in sorted(G.vertices(), key=lambda v: (-G.degree(v), v)):
        nv = masks[v]
        # a neighborhood inside an already processed one adds nothing new
        if any(nv & ~w == 0 for w in done):
            continue
        present[_submasks(nv)] = True
        done.append(nv)
    return SetFamily(G.n, np.flatnonzero(present).astype(np.int64))


def neighborhood_polynomial_oracle(G: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> Polynomial:
    if G.n == 0:
        _check_limit(G, limit)
        return Polynomial((1,))
    return Polynomial(complex_enumerate(G, limit).size_counts())


def is_in_complex(G: Graph, S: VertexSetLike) -> bool:
    """True iff some vertex of ``G`` is adjacent to every member of ``S``."""
    if isinstance(S, int):
        members = from_mask(S)
    else:
        members = frozenset(S)
    for s in members:
        _check_vertex(G, s)
    if not members:
        return G.n > 0
    return any(members <= nbrs for nbrs in G.adjacency)
