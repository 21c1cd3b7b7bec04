"""Hard-core engine: partition functions, marginals, moments."""

from fractions import Fraction as F

import pytest

from hardcore_lab import corpus
from hardcore_lab.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    generate,
    pasch_graph,
    path_graph,
)
from hardcore_lab.hardcore import (
    MemoLimitExceeded,
    brute_force_polynomial,
    cycle_polynomial,
    independence_polynomial,
    marginal,
    occupancy_fraction,
    occupancy_value,
    pair_marginal,
    path_polynomial,
    path_cycle_polynomial,
    profile,
    subset_polynomial,
    var_of_polynomial,
    variance_fraction,
    variance_value,
    variance_via_marginals,
)
from hardcore_lab.polynomials import Poly, RatFunc
from hardcore_lab.roots import nonneg_on_halfline
from hardcore_lab.sampler import SplitMix64

X = Poly([0, 1])
ONE_PLUS = Poly([1, 1])


def test_partition_examples():
    assert independence_polynomial(complete_graph(7)) == Poly([1, 7])
    assert independence_polynomial(generate("kab:1,2")) == Poly([1, 3, 1])
    assert independence_polynomial(pasch_graph()) == Poly([1, 10, 33, 42, 20, 6, 1])
    assert independence_polynomial(path_graph(4)) == Poly([1, 4, 3])


def test_brute_force_examples():
    assert brute_force_polynomial(empty_graph(3)) == ONE_PLUS ** 3
    assert brute_force_polynomial(cycle_graph(5)) == Poly([1, 5, 5])
    assert brute_force_polynomial(complete_bipartite(2, 2)) == Poly([1, 4, 2])
    with pytest.raises(ValueError):
        brute_force_polynomial(empty_graph(31))


def test_path_cycle_recurrences():
    assert path_polynomial(0) == Poly([1])
    assert path_polynomial(2) == Poly([1, 2])
    assert cycle_polynomial(4) == Poly([1, 4, 2])
    assert path_cycle_polynomial("cycle", 20) == independence_polynomial(cycle_graph(20))
    assert path_cycle_polynomial("path", 6) == independence_polynomial(path_graph(6))
    with pytest.raises(ValueError):
        cycle_polynomial(2)
    with pytest.raises(ValueError):
        path_cycle_polynomial("wheel", 5)


def test_oracle_equivalence_small():
    for g in corpus.connected_corpus(6):
        assert independence_polynomial(g) == brute_force_polynomial(g), g.label
    rng = SplitMix64(606)
    for _ in range(40):
        g = corpus.random_graph(9 + rng.randrange(4), rng)
        assert independence_polynomial(g) == brute_force_polynomial(g)


def test_partition_invariants():
    rng = SplitMix64(42)
    for _ in range(30):
        g = corpus.random_graph(2 + rng.randrange(9), rng)
        z = independence_polynomial(g)
        assert z.coefficient(0) == 1
        assert all(c > 0 for c in z.coeffs)
        # degree equals the independence number per the brute-force oracle
        assert z.degree == brute_force_polynomial(g).degree


def test_memo_limit():
    with pytest.raises(MemoLimitExceeded):
        independence_polynomial(cycle_graph(20), memo_limit=4)


def test_marginal_examples():
    assert marginal(complete_graph(2), 0) == RatFunc(X, Poly([1, 2]))
    assert marginal(complete_graph(2), 1) == RatFunc(X, Poly([1, 2]))
    assert pair_marginal(empty_graph(2), 0, 1) == RatFunc(X * X, ONE_PLUS ** 2)
    assert pair_marginal(path_graph(3), 0, 2) == RatFunc(X * X, Poly([1, 3, 1]))
    assert pair_marginal(path_graph(3), 0, 1).is_zero
    with pytest.raises(ValueError):
        pair_marginal(path_graph(3), 1, 1)


def test_occupancy_closed_forms():
    e = occupancy_fraction(complete_bipartite(3, 3))
    assert e == RatFunc(X * ONE_PLUS ** 2, 2 * ONE_PLUS ** 3 - 1)
    v = variance_fraction(complete_graph(5))
    assert v == RatFunc(X, Poly([1, 5]) ** 2)
    e3 = occupancy_fraction(pasch_graph())
    displayed = RatFunc(X * Poly([10, 66, 126, 80, 30, 6]),
                        10 * Poly([1, 10, 33, 42, 20, 6, 1]))
    assert e3 == displayed


def test_occupancy_is_mean_marginal():
    for g in [path_graph(5), cycle_graph(6), generate("kab:2,3")]:
        z = independence_polynomial(g)
        total = RatFunc(Poly())
        for u in range(g.n):
            total = total + marginal(g, u, z)
        assert total * F(1, g.n) == occupancy_fraction(g, z)


def test_variance_via_marginals_examples():
    assert variance_via_marginals(empty_graph(2)) == RatFunc(X, ONE_PLUS ** 2)
    assert variance_via_marginals(complete_graph(3)) == RatFunc(X, Poly([1, 3]) ** 2)
    assert variance_via_marginals(path_graph(5)) == variance_fraction(path_graph(5))


def test_variance_via_marginals_on_corpus_sample():
    rng = SplitMix64(8)
    for _ in range(15):
        g = corpus.random_graph(2 + rng.randrange(7), rng)
        assert variance_via_marginals(g) == variance_fraction(g)


def test_var_of_polynomial():
    assert var_of_polynomial(Poly([1, 2])) == RatFunc(2 * X, Poly([1, 2]) ** 2)
    assert var_of_polynomial(ONE_PLUS ** 3) == RatFunc(3 * X, ONE_PLUS ** 2)
    assert var_of_polynomial(Poly([1, 4, 2, 2])).evaluate(1) == F(74, 81)
    with pytest.raises(ValueError):
        var_of_polynomial(Poly([2, 1]))
    with pytest.raises(ValueError):
        var_of_polynomial(Poly([1, -1]))


def test_var_of_partition_is_scaled_variance_fraction():
    g = cycle_graph(6)
    z = independence_polynomial(g)
    assert var_of_polynomial(z) == variance_fraction(g, z) * g.n


def test_pointwise_evaluation_paths_agree():
    rng = SplitMix64(33)
    for _ in range(20):
        g = corpus.random_graph(2 + rng.randrange(8), rng)
        lam = F(1 + rng.randrange(8), 1 + rng.randrange(8))
        z = independence_polynomial(g)
        assert occupancy_value(g, lam, z) == occupancy_fraction(g, z).evaluate(lam)
        assert variance_value(g, lam, z) == variance_fraction(g, z).evaluate(lam)


def test_union_multiplicativity():
    one = generate("kab:1,2")
    three = generate("kab:1,2 + kab:1,2 + kab:1,2")
    assert independence_polynomial(three) == independence_polynomial(one) ** 3
    assert occupancy_fraction(three) == occupancy_fraction(one)
    assert variance_fraction(three) == variance_fraction(one)


def test_edge_removal_increases_partition():
    rng = SplitMix64(100)
    for _ in range(25):
        g = corpus.random_graph(3 + rng.randrange(6), rng)
        edges = g.edges()
        if not edges:
            continue
        u, v = edges[rng.randrange(len(edges))]
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        removed = type(g)(g.n, tuple(adj))
        diff = independence_polynomial(removed) - independence_polynomial(g)
        assert all(c >= 0 for c in diff.coeffs)
        assert not diff.is_zero


def test_marginal_bounds_as_rational_functions():
    # p_u <= lam/(1+lam) and p_uv <= (lam/(1+lam)) p_v on the whole half-line.
    rng = SplitMix64(55)
    for _ in range(10):
        g = corpus.random_graph(3 + rng.randrange(5), rng)
        z = independence_polynomial(g)
        full = (1 << g.n) - 1
        for u in range(g.n):
            rest = subset_polynomial(g, full & ~g.closed_mask(u))
            assert nonneg_on_halfline(z - ONE_PLUS * rest).holds
        for u in range(g.n):
            for v in range(g.n):
                if u == v or g.has_edge(u, v):
                    continue
                both = subset_polynomial(g, full & ~(g.closed_mask(u) | g.closed_mask(v)))
                single = subset_polynomial(g, full & ~g.closed_mask(v))
                assert nonneg_on_halfline(single - ONE_PLUS * both).holds


def test_profile_lazy_pairs():
    g = path_graph(4)
    prof = profile(g)
    assert prof.z == Poly([1, 4, 3])
    assert len(prof.marginals) == 4
    p02 = prof.pair_marginal(0, 2)
    assert prof.pair_marginal(2, 0) is p02
    assert prof.pair_marginal(0, 1).is_zero
