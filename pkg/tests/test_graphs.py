import networkx as nx
import pytest

from chorn import GraphError, Kind, build_graph, family_graph, find_peo, join_graph, parse_graph_spec, verify_peo
from chorn.graphs import all_labeled_graphs, all_peos, induced_subgraph, is_chordal_bruteforce, read_edge_file


def test_build_graph_normalizes_edges():
    g = build_graph(3, [(2, 1), (1, 2), (3, 2)])
    assert g.vertices == (1, 2, 3)
    assert g.edge_list() == [(1, 2), (2, 3)]
    assert g.neighbors(2) == frozenset({1, 3})


@pytest.mark.parametrize("edges", [[(1, 1)], [(1, 4)], [(0, 1)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_family_shapes():
    assert family_graph("P", 4).edge_list() == [(1, 2), (2, 3), (3, 4)]
    assert family_graph("C", 4).edge_list() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert family_graph("S", 4).edge_list() == [(1, 2), (1, 3), (1, 4)]
    assert len(family_graph("K", 5).edge_list()) == 10
    with pytest.raises(GraphError):
        family_graph("C", 2)


def test_independent_sets_of_c4(c4):
    sets = c4.independent_sets()
    assert sets[0] == ()
    assert sorted(s for s in sets if len(s) == 2) == [(1, 3), (2, 4)]
    assert len(sets) == 7


def test_parse_graph_spec(tmp_path):
    assert parse_graph_spec("K:3").kind is Kind.COMPLETE
    fam = parse_graph_spec("Pinf")
    assert fam.is_infinite
    assert fam.materialize([1, 2, 4]).edge_list() == [(1, 2)]
    path = tmp_path / "g.txt"
    path.write_text("3\n1 2\n2 3\n")
    assert read_edge_file(str(path)).edge_list() == [(1, 2), (2, 3)]
    assert parse_graph_spec(f"file:{path}").materialize().edge_list() == [(1, 2), (2, 3)]
    for bad in ("Q:3", "P:x", "C:1", "file:/nonexistent/graph"):
        with pytest.raises((GraphError, OSError)):
            parse_graph_spec(bad).materialize()


def test_join_graph_k2():
    j = join_graph(family_graph("K", 2), {1: 2, 2: 1})
    assert j.n == 3 and len(j.edge_list()) == 3


def test_join_graph_skips_zero_multiplicity():
    j = join_graph(family_graph("P", 3), {1: 1, 3: 2})
    assert j.n == 3
    assert j.edge_list() == [((3, 1), (3, 2))]


def test_find_peo_examples(c4, c4_chord):
    assert find_peo(family_graph("P", 3)).order == (1, 2, 3)
    assert find_peo(family_graph("P", 5)).order == (1, 2, 3, 4, 5)
    assert find_peo(c4) is None
    assert verify_peo(c4_chord, find_peo(c4_chord).order)


def test_verify_peo_reports_violation(c4):
    check = verify_peo(c4, (1, 2, 3, 4))
    assert not check
    assert check.violation.vertex == 4
    assert set(check.violation.pair) == {1, 3}
    with pytest.raises(GraphError):
        verify_peo(c4, (1, 2, 3))


def test_chordality_matches_networkx():
    for g in all_labeled_graphs(5):
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from(g.edge_list())
        assert is_chordal_bruteforce(g) == nx.is_chordal(h)
        assert (find_peo(g) is not None) == nx.is_chordal(h)


def test_all_labeled_graphs_count():
    assert sum(1 for _ in all_labeled_graphs(4)) == 64


def test_all_peos_of_path():
    orders = {p.order for p in all_peos(family_graph("P", 3))}
    # with 2 last, its earlier neighbours 1 and 3 are not adjacent
    assert all(o[-1] != 2 for o in orders)
    assert len(orders) == 4


def test_induced_subgraph(c4):
    h = induced_subgraph(c4, [1, 2, 3])
    assert h.edge_list() == [(1, 2), (2, 3)]
