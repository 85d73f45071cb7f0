import pytest
from hypothesis import given
import hypothesis.strategies as st

from chromarel import (
    EditError,
    EditKind,
    Graph,
    add_edge,
    bipartition,
    common_neighbors,
    connected_components,
    contract_edge,
    delete_edge,
    delete_vertex,
    delete_vertices,
    identify_vertices,
    independent_sets,
    induced_subgraph,
    is_connected,
    subdivide_edge,
)
from chromarel.graphs import AddEdge, DeleteEdge, DeleteVertex, mutate
from chromarel.families import cycle_graph, path_graph, complete_graph

from conftest import graphs


def test_from_edges_basic():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == [0, 2]
    assert g.degree(0) == 1


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(-1, [])


def test_equality_and_hash():
    a = Graph.from_edges(3, [(0, 1)])
    b = Graph.from_edges(3, [(1, 0)])
    c = Graph.from_edges(3, [(0, 2)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != c


def test_delete_vertex_shifts_ids():
    g = path_graph(4)
    h, trace = delete_vertex(g, 1)
    assert trace.kind is EditKind.DELETE_VERTEX
    assert trace.id_map == {0: 0, 1: None, 2: 1, 3: 2}
    assert h.n == 3
    assert h.edges() == [(1, 2)]


def test_delete_and_add_edge():
    g = cycle_graph(4)
    h, trace = delete_edge(g, 0, 1)
    assert trace.kind is EditKind.DELETE_EDGE
    assert trace.id_map == {v: v for v in range(4)}
    assert not h.has_edge(0, 1)
    back, trace2 = add_edge(h, 0, 1)
    assert back == g
    assert trace2.kind is EditKind.ADD_EDGE
    with pytest.raises(EditError):
        delete_edge(h, 0, 1)
    with pytest.raises(EditError):
        add_edge(g, 0, 1)


def test_identify_nonadjacent_pair():
    g = path_graph(4)
    h, trace = identify_vertices(g, 0, 2)
    assert trace.kind is EditKind.IDENTIFY
    assert trace.new_vertex == 2
    assert trace.id_map == {0: 2, 1: 0, 2: 2, 3: 1}
    # merged endpoint keeps both neighborhoods
    assert h.n == 3
    assert set(h.edges()) == {(0, 2), (1, 2)}
    with pytest.raises(EditError):
        identify_vertices(g, 0, 1)  # adjacent


def test_contract_edge():
    g = complete_graph(3)
    h, trace = contract_edge(g, 0, 1)
    assert trace.kind is EditKind.CONTRACT_EDGE
    assert h == complete_graph(2)
    assert trace.id_map == {0: 1, 1: 1, 2: 0}
    with pytest.raises(EditError):
        contract_edge(path_graph(3), 0, 2)  # not an edge


def test_identify_path_ends_gives_triangle():
    h, _ = identify_vertices(path_graph(4), 0, 3)
    assert h == complete_graph(3)


def test_subdivide_edge():
    g = complete_graph(3)
    h, trace = subdivide_edge(g, 0, 1)
    assert trace.kind is EditKind.SUBDIVIDE_EDGE
    assert trace.new_vertex == 3
    assert trace.id_map == {v: v for v in range(3)}
    # a 4-cycle through the new vertex
    assert set(h.edges()) == {(0, 2), (0, 3), (1, 2), (1, 3)}


def test_mutate_descriptors():
    g = cycle_graph(4)
    h, _ = mutate(g, DeleteEdge(0, 1))
    assert not h.has_edge(0, 1)
    h2, _ = mutate(h, AddEdge(0, 2))
    assert h2.has_edge(0, 2)
    h3, trace = mutate(g, DeleteVertex(3))
    assert h3.n == 3
    assert trace.id_map[3] is None


def test_induced_subgraph_and_delete_vertices():
    g = cycle_graph(5)
    h, idmap = induced_subgraph(g, [0, 1, 3])
    assert h.n == 3
    assert idmap == {0: 0, 1: 1, 3: 2}
    assert h.edges() == [(0, 1)]
    h2, idmap2 = delete_vertices(g, [2, 4])
    assert h2 == h
    assert idmap2 == {0: 0, 1: 1, 3: 2}


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    comps = connected_components(g)
    assert [sorted(c) for c in comps] == [[0, 1], [2, 3], [4]]
    assert not is_connected(g)
    assert is_connected(cycle_graph(4))
    assert is_connected(Graph.from_edges(1, []))
    assert is_connected(Graph.from_edges(0, []))


def test_bipartition():
    left, right = bipartition(cycle_graph(4))
    assert set(left) | set(right) == {0, 1, 2, 3}
    assert 0 in left  # least vertex goes left
    assert bipartition(cycle_graph(5)) is None
    # per component the least vertex lands on the left
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    left, right = bipartition(g)
    assert 0 in left and 2 in left


def test_common_neighbors():
    g = complete_graph(4)
    assert common_neighbors(g, 0, 1) == frozenset({2, 3})
    assert common_neighbors(path_graph(3), 0, 2) == frozenset({1})


def test_independent_sets_c5():
    g = cycle_graph(5)
    all_sets = list(independent_sets(g))
    assert len(all_sets) == 11  # empty + 5 singletons + 5 pairs
    assert all_sets[0] == frozenset()
    assert len(set(all_sets)) == 11
    maximal = list(independent_sets(g, mode="maximal"))
    assert len(maximal) == 5
    assert all(len(s) == 2 for s in maximal)


def test_independent_sets_seeded():
    g = cycle_graph(5)
    seeded = list(independent_sets(g, must_include=(0,)))
    assert all(0 in s for s in seeded)
    assert frozenset({0}) in seeded and frozenset({0, 2}) in seeded
    with pytest.raises(ValueError):
        list(independent_sets(g, must_include=(0, 1)))
    with pytest.raises(ValueError):
        independent_sets(g, mode="most")


@given(graphs(max_n=7), st.data())
def test_delete_vertex_trace_is_consistent(g, data):
    if g.n == 0:
        return
    u = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    h, trace = delete_vertex(g, u)
    assert h.n == g.n - 1
    for a in range(g.n):
        for b in range(a + 1, g.n):
            ma, mb = trace.id_map[a], trace.id_map[b]
            if ma is None or mb is None:
                continue
            assert g.has_edge(a, b) == h.has_edge(ma, mb)


@given(graphs(max_n=7))
def test_independent_sets_really_independent(g):
    for s in independent_sets(g):
        assert all(not g.has_edge(u, v) for u in s for v in s if u < v)


@given(graphs(max_n=6))
def test_identify_merges_neighborhoods(g):
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    for u, v in pairs:
        h, trace = identify_vertices(g, u, v)
        w = trace.new_vertex
        merged = {trace.id_map[x] for x in g.neighbors(u)}
        merged |= {trace.id_map[x] for x in g.neighbors(v)}
        assert set(h.neighbors(w)) == merged
