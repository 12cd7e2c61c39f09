from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbhdpoly.errors import OracleLimitExceeded
from nbhdpoly.generators import complete, cycle, empty, path, star
from nbhdpoly.graph import add_edge, disjoint_union_graph, from_edge_list
from nbhdpoly.oracle import (
    complex_enumerate,
    from_mask,
    is_in_complex,
    neighborhood_polynomial_oracle,
    to_mask,
)
from nbhdpoly.polynomial import Polynomial

from conftest import all_graphs, naive_neighborhood_counts, random_graph


def as_sets(family):
    return {frozenset(s) for s in family}


def test_c4_complex():
    fam = complex_enumerate(cycle(4))
    expected = {frozenset()} | {frozenset({v}) for v in range(4)} | {frozenset({1, 3}), frozenset({0, 2})}
    assert as_sets(fam) == expected
    assert len(fam) == 7


def test_k1_complex():
    assert as_sets(complex_enumerate(path(1))) == {frozenset()}


def test_star_complex():
    fam = as_sets(complex_enumerate(star(3)))
    leaves = [1, 2, 3]
    expected = {frozenset(s) for r in range(4) for s in combinations(leaves, r)}
    expected.add(frozenset({0}))
    assert fam == expected and len(fam) == 9


def test_reference_values():
    assert neighborhood_polynomial_oracle(cycle(4)) == Polynomial([1, 4, 2])
    assert neighborhood_polynomial_oracle(path(1)) == Polynomial([1])
    assert neighborhood_polynomial_oracle(from_edge_list(0, [])) == Polynomial([1])


@pytest.mark.parametrize("G,frozen", [
    (path(3), [1, 3, 1]),
    (path(4), [1, 4, 2]),
    (cycle(5), [1, 5, 5]),
    (complete(4), [1, 4, 6, 4]),
    (star(3), [1, 4, 3, 1]),
])
def test_small_values_against_naive_enumeration(G, frozen):
    naive = naive_neighborhood_counts(G)
    assert Polynomial(naive) == Polynomial(frozen)
    assert neighborhood_polynomial_oracle(G) == Polynomial(frozen)


def test_oracle_matches_naive_on_all_graphs_up_to_4():
    for n in range(1, 5):
        for G in all_graphs(n):
            assert neighborhood_polynomial_oracle(G) == Polynomial(naive_neighborhood_counts(G))


def test_is_in_complex():
    c4 = cycle(4)
    assert is_in_complex(c4, {1, 3})
    assert not is_in_complex(c4, {0, 1})
    assert is_in_complex(c4, set())
    assert is_in_complex(c4, to_mask({0, 2}))
    assert is_in_complex(from_edge_list(40, [(0, 39), (1, 39)]), {0, 1})


def test_mask_helpers():
    assert to_mask({0, 3}) == 9
    assert from_mask(9) == {0, 3}
    assert from_mask(0) == frozenset()


def test_family_membership():
    fam = complex_enumerate(cycle(4))
    assert {1, 3} in fam
    assert {0, 1} not in fam
    assert fam.size_counts() == [1, 4, 2]


def test_limit():
    with pytest.raises(OracleLimitExceeded, match="20"):
        complex_enumerate(empty(21))
    with pytest.raises(OracleLimitExceeded):
        neighborhood_polynomial_oracle(path(8), limit=5)
    assert neighborhood_polynomial_oracle(path(8), limit=8) == Polynomial([1, 8, 6])


def test_complete_graph_at_limit():
    p = neighborhood_polynomial_oracle(complete(20))
    assert p == Polynomial([comb(20, k) for k in range(20)])


graphs = st.builds(lambda n, r: random_graph(r, n), st.integers(1, 9), st.randoms(use_true_random=False))


@settings(max_examples=150)
@given(graphs)
def test_invariants(G):
    fam = complex_enumerate(G)
    N = neighborhood_polynomial_oracle(G)
    members = set(fam.masks())
    # downward closed
    for m in members:
        for v in range(G.n):
            if m >> v & 1:
                assert m & ~(1 << v) in members
    assert N[0] == 1
    assert N[1] == G.n - len(G.isolated_vertices())
    assert N.evaluate(1) == len(fam)
    delta = G.max_degree()
    if G.m:
        assert N.degree == delta
    assert all(N[k] >= comb(delta, k) for k in range(delta + 1))
    assert neighborhood_polynomial_oracle(disjoint_union_graph(G, path(1))) == N
    for u, v in [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)][:3]:
        assert neighborhood_polynomial_oracle(add_edge(G, u, v)).dominates(N)
