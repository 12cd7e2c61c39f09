"""Acceptance gate: one test per criterion, each reported as a PASS/FAIL line."""

import random
import time
import tracemalloc
from math import comb

import pytest

from nbhdpoly import neighborhood_polynomial
from nbhdpoly.decomposition import (
    cartesian_poly,
    cut_vertex_split_poly,
    disjoint_union_poly,
    edge_addition_general,
    edge_addition_restricted,
    independent_cut_split_poly,
    join_poly,
    matching_cut_poly,
    vertex_attachment_poly,
)
from nbhdpoly.domination import domination_oracle, domination_via_complement
from nbhdpoly.generators import cycle, ladder, path, prism, random_degenerate
from nbhdpoly.graph import (
    add_edge,
    attach_vertex,
    cartesian_product_graph,
    disjoint_union_graph,
    join_graph,
)
from nbhdpoly.oracle import complex_enumerate, neighborhood_polynomial_oracle as oracle
from nbhdpoly.polynomial import X, Polynomial, binomial_power
from nbhdpoly.reduction import neighborhood_polynomial_reduction

import instances
from conftest import all_graphs, random_graph

P = Polynomial
acceptance = pytest.mark.acceptance


def reduction(G):
    return neighborhood_polynomial_reduction(G)[0]


@acceptance(1, "ladder closed form for 4 <= n <= 50 (reduction, Cartesian rule, oracle), under 1 s")
def test_ladder_closed_form():
    start = time.perf_counter()
    for n in range(4, 51):
        expected = P([1, 4, 2]) + (2 * n - 4) * X * binomial_power(2)
        L = ladder(n)
        assert reduction(L) == expected
        assert cartesian_poly(path(2), path(n)) == expected
        if 2 * n <= 20:
            assert oracle(L) == expected
    assert time.perf_counter() - start < 1.0


@acceptance(2, "base values N(C4) = 1 + 4x + 2x^2 and N(K1) = 1")
def test_base_values():
    for N in (oracle, reduction, neighborhood_polynomial):
        assert N(cycle(4)) == P([1, 4, 2])
        assert N(path(1)) == P([1])


@acceptance(3, "oracle equals reduction on all graphs with 5 vertices and 500 random graphs, under 30 s")
def test_oracle_equals_reduction():
    start = time.perf_counter()
    mismatches = sum(oracle(G) != reduction(G) for G in all_graphs(5))
    rng = random.Random(3)
    for _ in range(500):
        G = random_graph(rng, rng.randint(6, 8))
        mismatches += oracle(G) != reduction(G)
    assert mismatches == 0
    assert time.perf_counter() - start < 30.0


def _suite():
    def union(rng):
        G1, G2 = instances.union_instance(rng)
        return disjoint_union_poly(oracle(G1), oracle(G2)), disjoint_union_graph(G1, G2)

    def join(rng):
        G1, G2 = instances.join_instance(rng)
        return join_poly(oracle(G1), G1.n, oracle(G2), G2.n), join_graph(G1, G2)

    def cartesian(rng):
        G1, G2 = instances.cartesian_instance(rng)
        return cartesian_poly(G1, G2), cartesian_product_graph(G1, G2)

    def cut_vertex(rng):
        G, v = instances.cut_vertex_instance(rng)
        return cut_vertex_split_poly(G, v), G

    def independent_cut(rng):
        G, W = instances.independent_cut_instance(rng)
        return independent_cut_split_poly(G, W), G

    def matching_cut(rng):
        G, F = instances.matching_cut_instance(rng)
        return matching_cut_poly(G, F, "corrected"), G

    def restricted_edge(rng):
        G, (u, v) = instances.restricted_edge_instance(rng)
        return edge_addition_restricted(G, u, v), add_edge(G, u, v)

    def general_edge(rng):
        G, (u, v) = instances.general_edge_instance(rng)
        return edge_addition_general(G, u, v, "corrected"), add_edge(G, u, v)

    def attachment(rng):
        G, U = instances.attachment_instance(rng)
        return vertex_attachment_poly(G, U), attach_vertex(G, U)

    return [union, join, cartesian, cut_vertex, independent_cut, matching_cut,
            restricted_edge, general_edge, attachment]


@acceptance(4, "every decomposition rule matches the oracle on 60 valid instances each (n <= 10)")
def test_theorem_suite():
    rng = random.Random(4)
    mismatches = []
    for rule in _suite():
        for i in range(60):
            got, target = rule(rng)
            assert target.n <= 10
            if got != oracle(target):
                mismatches.append((rule.__name__, i))
    assert mismatches == []


@acceptance(5, "literal-mode discrepancies reproduce exactly (C4 plus chord, triangular prism)")
def test_literal_discrepancies():
    chord = add_edge(cycle(4), 0, 2)
    assert edge_addition_general(cycle(4), 0, 2, "literal") == P([1, 4, 2])
    assert oracle(chord) == P([1, 4, 6, 2])
    rungs = [(0, 1), (2, 3), (4, 5)]
    assert matching_cut_poly(prism(3), rungs, "literal") == P([1, 6, 18, 6])
    assert oracle(prism(3)) == P([1, 6, 12, 6])


@acceptance(6, "domination identity on all graphs n <= 5 and 200 random graphs n <= 10; D(C4)")
def test_domination_identity():
    for n in range(1, 6):
        for G in all_graphs(n):
            assert domination_oracle(G) == domination_via_complement(G).polynomial
    rng = random.Random(6)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 10))
        assert domination_oracle(G) == domination_via_complement(G).polynomial
    assert domination_via_complement(cycle(4)).polynomial == P([0, 0, 6, 4, 1])


@acceptance(7, "structural invariants hold on 1000 random graphs n <= 12")
def test_invariants():
    rng = random.Random(7)
    for _ in range(1000):
        G = random_graph(rng, rng.randint(1, 12))
        N = neighborhood_polynomial(G)
        assert N == oracle(G)
        delta = G.max_degree()
        assert N[0] == 1
        assert N[1] == G.n - len(G.isolated_vertices())
        if G.m:
            assert N.degree == delta
        else:
            assert N == P([1])
        assert all(N[k] >= comb(delta, k) for k in range(delta + 1))
        if G.n < 12:
            assert neighborhood_polynomial(disjoint_union_graph(G, path(1))) == N
        missing = instances.non_edges(G)
        if missing:
            u, v = rng.choice(missing)
            assert neighborhood_polynomial(add_edge(G, u, v)).dominates(N)
        members = set(complex_enumerate(G).masks())
        for m in members:
            low = m & -m
            while low:
                if m & low:
                    assert m ^ low in members
                low <<= 1
                if low > m:
                    break


def _peak_bytes(G):
    tracemalloc.start()
    try:
        neighborhood_polynomial_reduction(G)
        return tracemalloc.get_traced_memory()[1]
    finally:
        tracemalloc.stop()


@acceptance(8, "reduction on ladder 10^5 and random 5-degenerate 10^4 under 10 s each, linear memory")
def test_performance():
    L = ladder(10 ** 5)
    start = time.perf_counter()
    N = neighborhood_polynomial(L)
    assert time.perf_counter() - start < 10.0
    assert N.degree == 3
    assert N == P([1, 4, 2]) + (2 * 10 ** 5 - 4) * X * binomial_power(2)

    D = random_degenerate(10 ** 4, 5, seed=8)
    start = time.perf_counter()
    N = neighborhood_polynomial(D)
    assert time.perf_counter() - start < 10.0
    assert N[0] == 1 and N[1] == D.n - len(D.isolated_vertices())

    # doubling the input should roughly double peak memory, not square it
    small, large = _peak_bytes(ladder(5000)), _peak_bytes(ladder(10000))
    assert large < 2.6 * small
