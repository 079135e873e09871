import pytest

from brdlab.graphs import (
    GenerationError,
    InputError,
    barabasi_albert,
    build_graph,
    clique,
    complete_bipartite,
    connected_components,
    cycle,
    disjoint_union,
    erdos_renyi,
    forbidden_subgraph_check,
    graph_from_json,
    induced_subgraph,
    is_disjoint_clique_union,
    parse_graph_spec,
    path,
    random_regular,
    star,
)


def test_build_graph_dedups_and_symmetrizes():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.edge_count() == 2
    assert g.neighbors()[1] == [0, 2]


def test_build_graph_rejects_self_loops_and_range():
    with pytest.raises(InputError):
        build_graph(3, [(0, 0)])
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InputError):
        build_graph(0, [])


def test_deterministic_generators():
    assert path(1).edge_count() == 0
    assert path(5).edge_count() == 4
    assert cycle(4).edge_count() == 4
    assert clique(5).edge_count() == 10
    assert complete_bipartite(5, 3).edge_count() == 15
    assert star(4).edge_count() == 4
    # star(m) is complete_bipartite(m, 1)
    assert star(4).edges == complete_bipartite(4, 1).edges


def test_disjoint_union_offsets_second_operand():
    g = disjoint_union(cycle(4), path(1))
    assert g.n == 5
    assert g.neighbors()[4] == []
    assert sorted(g.neighbors()[0]) == [1, 3]


def test_graph_json_round_trip():
    g = build_graph(4, [(0, 2), (1, 3)])
    assert graph_from_json(g.to_json()).edges == g.edges
    assert g.to_json() == {"n": 4, "edges": [[0, 2], [1, 3]]}


def test_erdos_renyi_reproducible_and_bounded():
    a = erdos_renyi(30, 0.2, seed=7)
    b = erdos_renyi(30, 0.2, seed=7)
    assert a.edges == b.edges
    assert erdos_renyi(30, 0.0, seed=1).edge_count() == 0
    assert erdos_renyi(10, 1.0, seed=1).edge_count() == 45


def test_barabasi_albert_degrees():
    g = barabasi_albert(50, 2, seed=3)
    degs = [len(s) for s in g.neighbors()]
    assert g.n == 50
    assert min(degs) >= 1
    # seed clique of size m plus m new edges per arriving vertex
    assert g.edge_count() == 1 + 2 * (50 - 2)


def test_random_regular_is_regular():
    g = random_regular(20, 4, seed=5)
    assert all(len(s) == 4 for s in g.neighbors())
    with pytest.raises(InputError):
        random_regular(5, 3, seed=0)  # odd n*d


def test_induced_subgraph_relabels():
    g = path(5)
    sub, labels = induced_subgraph(g, {1, 2, 4})
    assert labels == [1, 2, 4]
    assert sub.n == 3
    assert sub.edges == frozenset({(0, 1)})
    with pytest.raises(InputError):
        induced_subgraph(g, set())


def test_connected_components_partition():
    g = disjoint_union(cycle(4), path(1))
    comps = connected_components(g, set(range(5)))
    assert comps == [(0, 1, 2, 3), (4,)]
    comps = connected_components(path(5), {0, 1, 3})
    assert comps == [(0, 1), (3,)]


def test_is_disjoint_clique_union():
    g = disjoint_union(clique(3), clique(2))
    ok, sizes = is_disjoint_clique_union(g, set(range(5)))
    assert ok and sizes == [3, 2]
    ok, _ = is_disjoint_clique_union(path(4), {0, 1, 2})
    assert not ok  # induced P3 is not a clique


def test_forbidden_subgraphs():
    found = forbidden_subgraph_check(path(4))
    assert found["P4"] and not found["C4"] and not found["K13"]
    found = forbidden_subgraph_check(cycle(4))
    assert found["C4"]
    found = forbidden_subgraph_check(star(3))
    assert found["K13"]
    found = forbidden_subgraph_check(clique(4))
    assert not (found["P4"] or found["C4"] or found["K13"])


def test_parse_graph_spec():
    assert parse_graph_spec("path:100").n == 100
    assert parse_graph_spec("er:100:0.2", seed=1).n == 100
    assert parse_graph_spec("ba:100:5", seed=1).n == 100
    assert parse_graph_spec("rr:100:10", seed=1).n == 100
    assert parse_graph_spec("kml:60:5").n == 65
    with pytest.raises(InputError):
        parse_graph_spec("wat:3")
    with pytest.raises(InputError):
        parse_graph_spec("path:zero")
