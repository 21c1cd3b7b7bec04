"""Enumeration up to isomorphism and the six-vertex search oracle."""

from hardcore_lab import corpus
from hardcore_lab.graphs import Graph, bits_of, generate
from hardcore_lab.sampler import SplitMix64

# Counts of graphs (all / connected) up to isomorphism, cross-checked against
# the standard enumerations.
KNOWN_COUNTS = {
    1: (1, 1), 2: (2, 1), 3: (4, 2), 4: (11, 6), 5: (34, 21), 6: (156, 112),
    7: (1044, 853),
}


def test_enumeration_counts():
    for n, (total, connected) in KNOWN_COUNTS.items():
        assert len(corpus.all_graphs(n)) == total
        assert len(corpus.connected_graphs(n)) == connected


def test_connected_corpus_is_labeled_and_sized():
    graphs = corpus.connected_corpus(5)
    assert len(graphs) == 1 + 1 + 2 + 6 + 21
    assert all(g.label for g in graphs)


def _relabel(g: Graph, perm: list[int]) -> Graph:
    adj = [0] * g.n
    for u in range(g.n):
        for v in bits_of(g.adj[u]):
            adj[perm[u]] |= 1 << perm[v]
    return Graph(g.n, tuple(adj))


def test_canonical_key_is_relabeling_invariant():
    rng = SplitMix64(321)
    for _ in range(150):
        n = 2 + rng.randrange(7)
        g = corpus.random_graph(n, rng)
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.randrange(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        assert corpus.canonical_key(g) == corpus.canonical_key(_relabel(g, perm))


def test_canonical_key_separates_nonisomorphic():
    seen = set()
    for g in corpus.all_graphs(5):
        key = corpus.canonical_key(g)
        assert key not in seen
        seen.add(key)


def test_are_isomorphic():
    a = generate("path:4")
    b = _relabel(a, [2, 0, 3, 1])
    assert corpus.are_isomorphic(a, b)
    assert not corpus.are_isomorphic(a, generate("cycle:4"))


def test_random_graph_determinism():
    g1 = corpus.random_graph(10, SplitMix64(9))
    g2 = corpus.random_graph(10, SplitMix64(9))
    assert g1.adj == g2.adj


def test_random_triangle_free_generator():
    rng = SplitMix64(77)
    for _ in range(40):
        g = corpus.random_triangle_free_graph(3 + rng.randrange(10), rng)
        assert g.is_triangle_free()
        assert g.edge_count >= 1


def test_six_vertex_search_oracle_regression():
    # The search scans all 2^15 labeled six-vertex graphs; each signature
    # pins a unique isomorphism class, matching the frozen edge lists.
    found1 = corpus.search_g1()
    assert len(found1) == 1
    assert corpus.are_isomorphic(found1[0], generate("g1"))

    found2 = corpus.search_g2()
    assert len(found2) == 1
    assert corpus.are_isomorphic(found2[0], generate("g2"))
