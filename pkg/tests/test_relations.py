import pytest

from chromarel import (
    Graph,
    RelationKind,
    chromatic_number,
    criticality,
    critical_independent_sets,
    implicit_via_sets,
    is_critical_independent_set,
    is_implicit_edge,
    is_implicit_identity,
    min_nonextensible,
    relation_report,
    scan_relations,
    to_dot,
)
from chromarel.families import (
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    grotzsch,
    moser_spindle,
    path_graph,
    wheel_graph,
)

import oracles


def _pairs(rels, kind):
    return sorted((r.u, r.v) for r in rels if r.kind is kind)


def test_p4_relations():
    rels = scan_relations(path_graph(4))
    assert _pairs(rels, RelationKind.EDGE) == [(0, 3)]
    assert _pairs(rels, RelationKind.IDENTITY) == [(0, 2), (1, 3)]
    for r in rels:
        assert r.k == 2
        assert r.witness_route == "definition"
        assert not r.adjacent


def test_c4_relations():
    rels = scan_relations(cycle_graph(4))
    assert _pairs(rels, RelationKind.EDGE) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert _pairs(rels, RelationKind.IDENTITY) == [(0, 2), (1, 3)]
    adjacent = {(r.u, r.v): r.adjacent for r in rels}
    assert adjacent[(0, 1)] and not adjacent[(0, 2)]


@pytest.mark.parametrize(
    "g",
    [
        complete_graph(2),
        complete_graph(3),
        complete_graph(4),
        cycle_graph(5),
        wheel_graph(5),
        moser_spindle(),
        grotzsch(),
    ],
)
def test_graphs_with_no_relations(g):
    assert scan_relations(g) == []


def test_diamond_identity():
    # K4 minus an edge: the two degree-2 vertices always share a color
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    rels = scan_relations(g)
    assert _pairs(rels, RelationKind.EDGE) == []
    assert _pairs(rels, RelationKind.IDENTITY) == [(2, 3)]


def test_k5_minus_edge_identity():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (3, 4)]
    g = Graph.from_edges(5, edges)
    rels = scan_relations(g)
    assert _pairs(rels, RelationKind.IDENTITY) == [(3, 4)]
    assert _pairs(rels, RelationKind.EDGE) == []


def test_pair_predicates_validate_input():
    g = path_graph(4)
    with pytest.raises(ValueError):
        is_implicit_edge(g, 1, 1)
    with pytest.raises(ValueError):
        is_implicit_identity(g, 0, 4)


def test_scan_matches_assignment_enumeration():
    # every connected graph up to 4 vertices, classified two independent ways
    for n in range(2, 5):
        for g in enumerate_graphs(n, connected_only=True):
            expected = oracles.relations_by_assignment(g)
            got = {(r.u, r.v): r.kind.value for r in scan_relations(g)}
            assert got == expected, g.edges()


def test_scan_named_graphs_match_enumeration():
    for g in (cycle_graph(5), path_graph(5), wheel_graph(5)):
        expected = oracles.relations_by_assignment(g)
        got = {(r.u, r.v): r.kind.value for r in scan_relations(g)}
        assert got == expected


def test_identity_pairs_are_never_adjacent():
    for n in range(2, 5):
        for g in enumerate_graphs(n, connected_only=True):
            for r in scan_relations(g):
                if r.kind is RelationKind.IDENTITY:
                    assert not g.has_edge(r.u, r.v)


def test_set_route_direct():
    g = path_graph(4)
    assert implicit_via_sets(g, 0, 3, RelationKind.EDGE)
    assert implicit_via_sets(g, 0, 2, RelationKind.IDENTITY)
    assert not implicit_via_sets(g, 0, 2, RelationKind.EDGE)
    assert not implicit_via_sets(g, 1, 2, RelationKind.EDGE)


def test_criticality_reports():
    c5 = criticality(cycle_graph(5))
    assert c5.k == 3
    assert c5.critical_vertices == (0, 1, 2, 3, 4)
    assert len(c5.critical_edges) == 5
    assert c5.is_vertex_critical and c5.is_critical
    assert not c5.is_double_critical

    k4 = criticality(complete_graph(4))
    assert k4.is_double_critical and k4.is_critical

    p4 = criticality(path_graph(4))
    assert p4.critical_vertices == ()
    assert not p4.is_critical

    w5 = criticality(wheel_graph(5))
    assert w5.k == 4 and w5.is_critical

    assert criticality(grotzsch()).is_critical


def test_critical_independent_sets_on_c5():
    g = cycle_graph(5)
    sets = list(critical_independent_sets(g))
    assert len(sets) == 10  # 5 singletons, 5 nonadjacent pairs
    assert all(is_critical_independent_set(g, s) for s in sets)
    avoiding = list(critical_independent_sets(g, avoid=(0, 1)))
    assert all(not s & {0, 1} for s in avoiding)
    assert len(avoiding) == 4  # {2},{3},{4},{2,4}


def test_is_critical_independent_set_validates():
    g = cycle_graph(5)
    with pytest.raises(ValueError):
        is_critical_independent_set(g, {0, 1})  # not independent
    assert not is_critical_independent_set(g, set())


def test_min_nonextensible_p4():
    cert = min_nonextensible(path_graph(4), 2)
    assert cert is not None
    assert cert.size == 2
    assert cert.exhausted
    assert cert.k == 2
    # the sweep finds the identity pair {0,2} first, colored apart
    assert cert.precoloring.assignment == {0: 1, 2: 2}


def test_min_nonextensible_diamond():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    cert = min_nonextensible(g, 3)
    assert cert is not None
    assert cert.precoloring.assignment == {2: 1, 3: 2}


def test_min_nonextensible_none_cases():
    assert min_nonextensible(cycle_graph(5), 3) is None
    assert min_nonextensible(complete_graph(3), 3) is None
    # above chi everything of size <= 2 extends on these
    assert min_nonextensible(path_graph(4), 3) is None


def test_min_nonextensible_below_chi():
    # below chi even one pinned vertex is already stuck
    cert = min_nonextensible(cycle_graph(5), 2)
    assert cert is not None and cert.size == 1


def test_min_nonextensible_size_three_bowtie():
    # two triangles sharing vertex 2; no pair is forced, but a rainbow
    # around the shared vertex strands it
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert scan_relations(g) == []
    assert min_nonextensible(g, 3, max_size=2) is None
    cert = min_nonextensible(g, 3, max_size=3)
    assert cert is not None
    assert cert.size == 3
    assert cert.precoloring.assignment == {0: 1, 1: 2, 3: 3}


def test_relation_report_shape():
    report = relation_report(path_graph(4))
    assert report == {
        "chi": 2,
        "edges": [[0, 3]],
        "identities": [[0, 2], [1, 3]],
        "critical_vertices": [],
        "critical_edges": [],
        "double_critical": False,
    }


def test_to_dot_styles():
    g = path_graph(4)
    dot = to_dot(g, scan_relations(g))
    assert "0 -- 1" in dot
    assert "style=dashed" in dot and "color=red" in dot
    assert "style=dotted" in dot and "color=blue" in dot
    plain = to_dot(g)
    assert "dashed" not in plain
