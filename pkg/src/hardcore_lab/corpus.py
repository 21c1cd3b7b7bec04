"""Graph corpora: canonical forms, exhaustive enumeration up to isomorphism,
seeded random graph streams, and the six-vertex counterexample search."""

from __future__ import annotations

import functools

from .graphs import Graph, bits_of


# -- canonical labeling -----------------------------------------------------

def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterated color refinement by multisets of neighbor colors."""
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in bits_of(adj[v]))))
            for v in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = [order[signatures[v]] for v in range(n)]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _key_for_order(n: int, adj: tuple[int, ...], perm: list[int]) -> int:
    key = 0
    for i in range(n):
        ai = adj[perm[i]]
        for j in range(i + 1, n):
            key = (key << 1) | (ai >> perm[j] & 1)
    return key


def canonical_bits(n: int, adj: tuple[int, ...]) -> int:
    """Canonical upper-triangle adjacency bits: the maximum readout over all
    orderings compatible with color refinement, with individualization to
    split classes refinement cannot."""
    if n <= 1:
        return 0

    best = -1

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, adj, colors)
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = c
                break
        if target is None:
            perm = sorted(range(n), key=lambda v: colors[v])
            key = _key_for_order(n, adj, perm)
            if key > best:
                best = key
            return
        distinguished = max(colors) + 1
        for v in classes[target]:
            branched = list(colors)
            branched[v] = distinguished
            search(branched)

    search([0] * n)
    return best


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, canonical_bits(g.n, g.adj)


def _graph_from_bits(n: int, bits: int) -> Graph:
    adj = [0] * n
    k = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            k -= 1
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_key(g) == canonical_key(h)


# -- exhaustive enumeration --------------------------------------------------

@functools.lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, one canonical
    representative each, built by vertex augmentation."""
    if n == 0:
        return (Graph(0, ()),)
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[int, None] = {}
    for g in all_graphs(n - 1):
        for subset in range(1 << (n - 1)):
            adj = list(g.adj) + [subset]
            for v in bits_of(subset):
                adj[v] |= 1 << (n - 1)
            seen.setdefault(canonical_bits(n, tuple(adj)), None)
    return tuple(_graph_from_bits(n, bits) for bits in sorted(seen))


@functools.lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if g.is_connected())


@functools.lru_cache(maxsize=None)
def connected_corpus(max_n: int) -> tuple[Graph, ...]:
    """The standard small-graph corpus: every connected graph on 1..max_n
    vertices up to isomorphism, labeled for reporting."""
    out = []
    for n in range(1, max_n + 1):
        for i, g in enumerate(connected_graphs(n)):
            out.append(g.with_label(f"conn{n}#{i}"))
    return tuple(out)


# -- random graphs ------------------------------------------------------------

def random_graph(n: int, rng, p_numer: int = 1, p_denom: int = 2) -> Graph:
    """Each edge present independently with probability p_numer/p_denom."""
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.randrange(p_denom) < p_numer:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def random_triangle_free_graph(n: int, rng) -> Graph:
    """Greedy random triangle-free graph: insert a random permutation of the
    pairs, skipping any edge that would close a triangle."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for i in range(len(pairs) - 1, 0, -1):
        j = rng.randrange(i + 1)
        pairs[i], pairs[j] = pairs[j], pairs[i]
    adj = [0] * n
    for u, v in pairs:
        if not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# -- six-vertex counterexample search -----------------------------------------

def find_six_vertex_counterexamples(
    z_coeffs: tuple[int, ...],
    edge_types: dict[tuple[int, int], int],
) -> list[Graph]:
    """Scan all 2^15 graphs on six labeled vertices for those whose
    independence polynomial matches z_coeffs and whose multiset of edge
    degree pairs matches edge_types; returns one representative per
    isomorphism class."""
    from .hardcore import brute_force_polynomial

    found: dict[int, Graph] = {}
    n = 6
    for bits in range(1 << 15):
        g = _graph_from_bits(n, bits)
        types: dict[tuple[int, int], int] = {}
        for u, v in g.edges():
            du, dv = g.degree(u), g.degree(v)
            key = (min(du, dv), max(du, dv))
            types[key] = types.get(key, 0) + 1
        if types != edge_types:
            continue
        if brute_force_polynomial(g).coeffs != z_coeffs:
            continue
        found.setdefault(canonical_bits(n, g.adj), g)
    return [found[k] for k in sorted(found)]


G1_SIGNATURE = {
    "z": (1, 6, 8, 4, 1),
    "edge_types": {(2, 3): 3, (1, 4): 1, (2, 4): 3},
}

G2_SIGNATURE = {
    "z": (1, 6, 9, 4, 1),
    "edge_types": {(1, 3): 2, (2, 3): 4},
}


def search_g1() -> list[Graph]:
    return find_six_vertex_counterexamples(G1_SIGNATURE["z"], G1_SIGNATURE["edge_types"])


def search_g2() -> list[Graph]:
    return find_six_vertex_counterexamples(G2_SIGNATURE["z"], G2_SIGNATURE["edge_types"])
