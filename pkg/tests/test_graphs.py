"""Graph substrate: generators, graph6, neighborhoods, identities."""

import pytest

from hardcore_lab.graphs import (
    Graph,
    bits_of,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    encode_graph6,
    from_edges,
    generate,
    g1_graph,
    g2_graph,
    parse_graph6,
    pasch_graph,
    path_graph,
    petersen_graph,
    read_edge_list,
)
from hardcore_lab.corpus import random_graph
from hardcore_lab.sampler import SplitMix64


def test_triangle():
    g = generate("kn:3")
    assert g.degrees() == (2, 2, 2) and g.edge_count == 3


def test_adjacency_validation():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # self-loop on vertex 0
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)


def test_pasch_structure():
    g = pasch_graph()
    assert g.n == 10 and g.edge_count == 12
    assert sorted(g.degrees()) == [2] * 6 + [3] * 4
    assert all(sorted((g.degree(u), g.degree(v))) == [2, 3] for u, v in g.edges())
    assert g.is_triangle_free()


def test_petersen_structure():
    g = petersen_graph()
    assert g.n == 10 and g.edge_count == 15
    assert g.degrees() == (3,) * 10 and g.is_triangle_free()


def test_pinned_six_vertex_graphs():
    g1 = g1_graph()
    assert g1.n == 6 and g1.edge_count == 7
    types: dict[tuple[int, int], int] = {}
    for u, v in g1.edges():
        key = tuple(sorted((g1.degree(u), g1.degree(v))))
        types[key] = types.get(key, 0) + 1
    assert types == {(2, 3): 3, (1, 4): 1, (2, 4): 3}

    g2 = g2_graph()
    assert g2.n == 6 and g2.edge_count == 6
    types = {}
    for u, v in g2.edges():
        key = tuple(sorted((g2.degree(u), g2.degree(v))))
        types[key] = types.get(key, 0) + 1
    assert types == {(1, 3): 2, (2, 3): 4}


def test_generator_unions_and_copies():
    g = generate("kab:1,2 + kab:1,2 + kab:1,2")
    assert g.n == 9 and g.edge_count == 6
    h = generate("3*kab:1,2")
    assert h.n == 9 and h.adj == g.adj
    mixed = generate("kn:3 + path:2")
    assert mixed.n == 5 and mixed.edge_count == 4


def test_generator_errors():
    for bad in ("frob:3", "kn:0", "cycle:2", "kn:99", "", "kn:3 + + kn:2", "0*kn:2"):
        with pytest.raises(ValueError):
            generate(bad)


def test_graph6_known_strings():
    assert parse_graph6("A_").edges() == [(0, 1)]
    empty2 = parse_graph6("A?")
    assert empty2.n == 2 and empty2.edge_count == 0
    assert parse_graph6("Bw").degrees() == (2, 2, 2)


def test_graph6_round_trip_random_corpus():
    rng = SplitMix64(314159)
    for _ in range(1000):
        n = 1 + rng.randrange(16)
        g = random_graph(n, rng)
        assert parse_graph6(encode_graph6(g)) == Graph(g.n, g.adj)


def test_graph6_large_header_round_trip():
    rng = SplitMix64(1)
    g = random_graph(64, rng)
    s = encode_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == Graph(g.n, g.adj)


def test_graph6_malformed():
    for bad in ("", "Bww", "B", "~??"):
        with pytest.raises(ValueError):
            parse_graph6(bad)


def test_neighborhood_data_path_middle():
    g = path_graph(5)
    nd = g.neighborhood_data(2)
    assert nd.open_mask.bit_count() == 2
    assert nd.second_mask.bit_count() == 2
    assert all(d == 1 for d in nd.codegrees.values())


def test_neighborhood_data_complete():
    g = complete_graph(4)
    assert all(g.neighborhood_data(u).second_mask == 0 for u in range(4))


def test_neighborhood_data_cycle5():
    g = cycle_graph(5)
    for u in range(5):
        nd = g.neighborhood_data(u)
        assert nd.open_mask.bit_count() == 2
        assert nd.second_mask.bit_count() == 2
        assert set(nd.codegrees.values()) == {1}


def test_triangle_free_detection():
    assert not complete_graph(3).is_triangle_free()
    assert complete_bipartite(3, 3).is_triangle_free()
    assert pasch_graph().is_triangle_free()


def test_edge_count_identity_named():
    for u in range(5):
        assert cycle_graph(5).tf_edge_count_identity(u)
    g = pasch_graph()
    for u in range(g.n):
        assert g.tf_edge_count_identity(u)
    g = complete_bipartite(2, 3)
    # a degree-3 vertex sits in the part of size 2
    v = next(u for u in range(5) if g.degree(u) == 3)
    assert g.tf_edge_count_identity(v)
    with pytest.raises(ValueError):
        complete_graph(3).tf_edge_count_identity(0)


def test_handshake_on_random_graphs():
    rng = SplitMix64(17)
    for _ in range(100):
        g = random_graph(1 + rng.randrange(12), rng)
        assert sum(g.degrees()) == 2 * g.edge_count
        assert sum(g.degrees()) % 2 == 0


def test_components_and_clique_unions():
    g = generate("kn:3 + kn:2 + empty:1")
    assert len(g.components()) == 3
    assert g.is_disjoint_union_of_cliques()
    assert not path_graph(3).is_disjoint_union_of_cliques()
    assert complete_graph(4).is_connected()
    assert not g.is_connected()


def test_induced_subgraph():
    g = cycle_graph(5)
    h = g.induced(0b01011)  # vertices 0, 1, 3
    assert h.n == 3 and h.edge_count == 1  # only the 0-1 edge survives


def test_disjoint_union_shifts_masks():
    g = disjoint_union(complete_graph(2), complete_graph(2))
    assert g.edges() == [(0, 1), (2, 3)]


def test_edge_list_parsing():
    text = "# a triangle plus an isolated edge\n0 1\n1 2\n2 0\n\n3 4\n"
    g = read_edge_list(text)
    assert g.n == 5 and g.edge_count == 4
    with pytest.raises(ValueError):
        read_edge_list("0 1 2")
    with pytest.raises(ValueError):
        read_edge_list("1 1")


def test_bits_of_order():
    assert list(bits_of(0b101001)) == [0, 3, 5]


def test_from_edges_rejects_self_loop():
    with pytest.raises(ValueError):
        from_edges(2, [(0, 0)])
