import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbhdpoly.errors import GraphError
from nbhdpoly.generators import (
    complete,
    cycle,
    empty,
    generate,
    grid,
    ladder,
    modified_ladder,
    path,
    prism,
    random_degenerate,
    star,
)
from nbhdpoly.graph import (
    Graph,
    add_edge,
    attach_vertex,
    cartesian_product_graph,
    common_neighborhood,
    complement,
    connected_components,
    degeneracy,
    degeneracy_ordering,
    disjoint_union_graph,
    format_edge_list,
    from_edge_list,
    join_graph,
    neighborhood,
    parse_edge_list,
    peel,
    read_edge_list,
    remove_vertex,
)

from conftest import random_graph


def assert_simple(G):
    for v, nbrs in enumerate(G.adjacency):
        assert v not in nbrs
        for u in nbrs:
            assert v in G.adjacency[u]
    assert G.m * 2 == sum(G.degrees())


def relabel_equal(G, H):
    """Labeled-graph comparison up to the obvious isomorphism test used in tests:
    same sorted degree sequence and same sorted multiset of neighbor-degree lists."""
    def sig(K):
        return sorted((K.degree(v), sorted(K.degree(u) for u in K.adjacency[v])) for v in K.vertices())
    return G.n == H.n and G.m == H.m and sig(G) == sig(H)


def test_from_edge_list_examples():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert p3.degrees() == [1, 2, 1]
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.degrees() == [2, 2, 2, 2]
    assert_simple(c4)


@pytest.mark.parametrize("n,edges", [
    (2, [(0, 0)]),
    (3, [(0, 1), (1, 0)]),
    (3, [(0, 1), (0, 1)]),
    (2, [(0, 2)]),
    (2, [(-1, 0)]),
])
def test_from_edge_list_rejects(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_constructor_validates_adjacency():
    with pytest.raises(GraphError):
        Graph([{1}, set()])
    with pytest.raises(GraphError):
        Graph([{0}])
    with pytest.raises(GraphError):
        Graph([{3}, {0}])
    assert Graph([{1}, {0}]).m == 1


def test_order_zero_graph_is_allowed():
    G = from_edge_list(0, [])
    assert G.n == 0 and G.m == 0
    assert degeneracy_ordering(G) == ([], 0)
    assert connected_components(G) == []


def test_generators():
    assert ladder(2).n == 4 and ladder(2).m == 4
    assert relabel_equal(ladder(2), cycle(4))
    assert path(1).n == 1 and path(1).m == 0
    assert sorted(modified_ladder(3).degrees()) == [1, 2, 2, 2, 3]
    assert modified_ladder(5).n == 9
    assert [d for d in modified_ladder(5).degrees()].count(1) == 1
    assert star(3).degrees() == [3, 1, 1, 1]
    assert complete(4).m == 6
    assert grid(3, 4).n == 12 and grid(3, 4).m == 17
    assert prism(3).n == 6 and prism(3).m == 9
    for G in (ladder(6), grid(3, 3), prism(4), star(5), complete(5), empty(3)):
        assert_simple(G)


@pytest.mark.parametrize("bad", [lambda: path(0), lambda: cycle(2), lambda: star(0),
                                 lambda: ladder(1), lambda: complete(-1), lambda: grid(0, 3)])
def test_generators_reject_nonpositive(bad):
    with pytest.raises(GraphError):
        bad()


def test_generate_spec():
    assert generate("ladder:5") == ladder(5)
    assert generate("grid:3x4") == grid(3, 4)
    assert generate("grid:3,4") == grid(3, 4)
    assert generate("modified-ladder:4") == modified_ladder(4)
    assert generate("degenerate:50,3,7") == random_degenerate(50, 3, 7)
    for bad in ("ladder", "blob:3", "grid:3", "path:x"):
        with pytest.raises(GraphError):
            generate(bad)


def test_complement():
    assert complement(complete(5)).m == 0
    c = complement(cycle(4))
    assert sorted(c.edges()) == [(0, 2), (1, 3)]
    assert len(connected_components(c)) == 2
    assert complement(complement(path(3))) == path(3)


@given(st.integers(0, 9), st.randoms(use_true_random=False))
def test_complement_involution(n, r):
    G = random_graph(r, n)
    assert complement(complement(G)) == G
    assert G.m + complement(G).m == n * (n - 1) // 2


def test_products():
    assert join_graph(path(1), path(1)) == path(2)
    j = join_graph(path(2), empty(3))
    assert j.n == 5 and j.m == 1 + 6
    u = disjoint_union_graph(path(3), cycle(4))
    assert u.n == 7 and u.m == 6
    assert relabel_equal(cartesian_product_graph(path(2), path(2)), cycle(4))
    assert cartesian_product_graph(path(2), path(7)) == ladder(7)


@pytest.mark.parametrize("n", range(2, 51))
def test_ladder_size(n):
    L = cartesian_product_graph(path(2), path(n))
    assert L.n == 2 * n and L.m == 3 * n - 2


def test_neighborhoods():
    c4 = cycle(4)
    assert neighborhood(c4, 0) == {1, 3}
    assert neighborhood(star(3), 0) == {1, 2, 3}
    assert neighborhood(empty(2), 1) == frozenset()
    with pytest.raises(GraphError):
        neighborhood(c4, 4)
    assert common_neighborhood(c4, {0, 2}) == {1, 3}
    assert common_neighborhood(c4, {1}) == neighborhood(c4, 1)
    assert common_neighborhood(c4, set()) == {0, 1, 2, 3}


def test_degeneracy_examples():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 15)
        # random tree plus nothing: a forest with at least one edge
        tree = from_edge_list(n, [(rng.randrange(i), i) for i in range(1, n)])
        assert degeneracy(tree) == 1
    for n in range(2, 20):
        assert degeneracy(ladder(n)) == 2
    assert degeneracy(complete(4)) == 3
    assert degeneracy(empty(5)) == 0
    order, k = degeneracy_ordering(path(3))
    assert order == [0, 1, 2] and k == 1


@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_degeneracy_properties(n, r):
    G = random_graph(r, n)
    order, residual = peel(G)
    assert sorted(order) == list(range(n))
    k = max(residual)
    assert k <= G.max_degree()
    # each removed vertex had minimum degree in the remaining graph
    alive = set(range(n))
    for v, d in zip(order, residual):
        degs = {u: len(G.adjacency[u] & alive) for u in alive}
        assert degs[v] == d == min(degs.values())
        alive.remove(v)


@given(st.integers(0, 12), st.randoms(use_true_random=False))
def test_components_partition(n, r):
    G = random_graph(r, n, r.random() * 0.4)
    comps = connected_components(G)
    seen = set()
    for c in comps:
        assert not (seen & c)
        seen |= c
        # internally connected: BFS inside c reaches all of c
        start = min(c)
        reach, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in G.adjacency[v]:
                assert u in c
                if u not in reach:
                    reach.add(u)
                    stack.append(u)
        assert reach == c
    assert seen == set(range(n))


def test_components_examples():
    assert sorted(len(c) for c in connected_components(complement(cycle(4)))) == [2, 2]
    assert len(connected_components(cycle(4))) == 1
    G, mapping = remove_vertex(cycle(4), 0)
    assert G == path(3)
    assert mapping == {1: 0, 2: 1, 3: 2}
    assert len(connected_components(G)) == 1


def test_remove_and_add():
    for v in range(4):
        assert relabel_equal(remove_vertex(cycle(4), v)[0], path(3))
    assert add_edge(path(3), 0, 2) == complete(3)
    with pytest.raises(GraphError):
        add_edge(path(3), 0, 1)
    with pytest.raises(GraphError):
        add_edge(path(3), 1, 1)
    for n in range(2, 8):
        assert remove_vertex(ladder(n), 0)[0] == modified_ladder(n)
    G = attach_vertex(path(3), [0, 2])
    assert relabel_equal(G, cycle(4))
    assert_simple(G)


def test_immutability():
    G = path(3)
    add_edge(G, 0, 2)
    remove_vertex(G, 1)
    assert G.edges() == [(0, 1), (1, 2)]
    with pytest.raises(AttributeError):
        G.adjacency[0].add(2)


def test_edge_list_round_trip(tmp_path):
    text = "# a 4-cycle\n4 4\n0 1\n1 2  # inline\n2 3\n3 0\n"
    G = parse_edge_list(text)
    assert G == cycle(4)
    out = tmp_path / "g.txt"
    out.write_text(format_edge_list(grid(3, 3)))
    assert read_edge_list(out) == grid(3, 3)


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "2 1\n0 0\n", "2 1\n0 a\n", "2 1\n0 1 2\n"])
def test_edge_list_rejects(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


@settings(max_examples=50)
@given(st.integers(1, 300), st.integers(0, 6), st.integers(0, 10**6))
def test_random_degenerate_bound(n, k, seed):
    G = random_degenerate(n, k, seed)
    assert degeneracy(G) <= k
    assert_simple(G)
