"""Acceptance suite: one test per criterion, each printing a pass line with
its runtime against the stated budget.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""

import time
from fractions import Fraction as F

from hardcore_lab import bounds, corpus, orderings, series
from hardcore_lab.graphs import (
    complete_bipartite,
    cycle_graph,
    empty_graph,
    generate,
    petersen_graph,
)
from hardcore_lab.hardcore import (
    brute_force_polynomial,
    cycle_polynomial,
    independence_polynomial,
    occupancy_value,
    subset_polynomial,
    var_of_polynomial,
    variance_value_of_poly,
)
from hardcore_lab.intervals import free_energy_interval, log1p_interval
from hardcore_lab.orderings import compare, var_difference_certificate
from hardcore_lab.polynomials import Poly
from hardcore_lab.sampler import CROSS_VALIDATION_CASES, SplitMix64, estimate
from hardcore_lab.verdict import HOLDS


def _pass(number: int, label: str, start: float, budget: float) -> None:
    elapsed = time.monotonic() - start
    print(f"\ncriterion {number:02d} ({label}): PASS in {elapsed:.1f}s "
          f"(budget {budget:.0f}s)")
    assert elapsed < budget, f"runtime budget exceeded: {elapsed:.1f}s"


def test_criterion_01_lemma_suite():
    start = time.monotonic()
    p_cube = Poly([1, 3, 1]) ** 3

    # FV and VAR both hold, with the factored certificate.
    q1 = Poly([1, 2]) ** 3 * Poly([1, 3])
    assert compare("FV", p_cube, q1).holds
    assert compare("VAR", p_cube, q1).holds
    factored = (3 * Poly([0, 0, 0, 1]) * Poly([1, 2]) ** 4 * Poly([1, 3, 1]) ** 4
                * Poly([3, 32, 118, 176, 86]))
    assert var_difference_certificate(p_cube, q1) == factored

    # VAR without FV, with the degree-21 certificate.
    q2 = Poly([1, 9, 30, 44, 24, 9])
    v = compare("FV", p_cube, q2)
    assert v.fails and v.witness == 4
    assert compare("VAR", p_cube, q2).holds
    cert = var_difference_certificate(p_cube, q2)
    assert cert.degree == 21 and cert.lc == 513

    # VAR without COEF.
    q3 = Poly([1, 9, 30, 44, 24, 10])
    assert compare("COEF", p_cube, q3).fails
    assert compare("VAR", p_cube, q3).holds

    # FV without VAR, three pairs with the exact evaluation values.
    pairs = [
        (Poly([1, 4, 2, 2]), Poly([1, 2, 1, 1]), F(26, 25), F(74, 81)),
        (Poly([1, 10, 210, 21, 21, 21]), Poly([1, 10, 10, 1, 1, 1]),
         F(53, 48), F(18619, 20164)),
        (Poly([1, 10, 1, 20010, 2001, 2001]), Poly([1, 10, 1, 10, 1, 1]),
         F(293, 192), F(68604293, 192384192)),
    ]
    for p, q, vq, vp in pairs:
        assert compare("FV", p, q).holds
        assert compare("VAR", p, q).fails
        assert var_of_polynomial(q).evaluate(1) == vq
        assert var_of_polynomial(p).evaluate(1) == vp

    _pass(1, "lemma suite", start, 5)


def test_criterion_02_edge_counterexamples():
    start = time.monotonic()
    found1 = corpus.search_g1()
    found2 = corpus.search_g2()
    assert len(found1) == 1 and corpus.are_isomorphic(found1[0], generate("g1"))
    assert len(found2) == 1 and corpus.are_isomorphic(found2[0], generate("g2"))
    for check in bounds.check_edge_occ_counterexamples(5):
        assert check.holds, (check.name, check.graph)
    _pass(2, "edge-based occupancy counterexamples", start, 60)


def test_criterion_03_degree_floor_corpus():
    start = time.monotonic()
    checked = 0
    for g in corpus.connected_corpus(7):
        lam = F(3, (g.max_degree + 1) ** 2)
        z = independence_polynomial(g)
        e = occupancy_value(g, lam, z)
        floor = bounds.degree_floor_value(g, lam)
        assert floor <= e, g.label
        assert (floor == e) == g.is_disjoint_union_of_cliques(), g.label
        checked += 1
    assert checked == 996

    rng = SplitMix64(30303)
    for _ in range(10**4):
        n = 2 + rng.randrange(11)
        g = corpus.random_graph(n, rng)
        lam = F(3, (g.max_degree + 1) ** 2)
        z = independence_polynomial(g)
        e = occupancy_value(g, lam, z)
        floor = bounds.degree_floor_value(g, lam)
        assert floor <= e
        assert (floor == e) == g.is_disjoint_union_of_cliques()
    _pass(3, "degree-sequence occupancy floor corpus", start, 600)


def test_criterion_04_variance_window_corpus():
    start = time.monotonic()
    checked = 0
    for n in range(1, 8):
        for g in corpus.all_graphs(n):
            z = independence_polynomial(g)
            for lam, kind in ((F(1, 2 * n), "floor"), (F(1, n), "ceiling")):
                v = variance_value_of_poly(z, n, lam)
                if kind == "floor":
                    assert lam / (1 + n * lam) ** 2 <= v, (n, g.adj)
                else:
                    assert v <= lam / (1 + lam) ** 2, (n, g.adj)
            checked += 1
    assert checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044

    # extremal graphs achieve equality
    for n in range(2, 8):
        zk = independence_polynomial(generate(f"kn:{n}"))
        lam = F(1, 2 * n)
        assert variance_value_of_poly(zk, n, lam) == lam / (1 + n * lam) ** 2
        ze = independence_polynomial(empty_graph(n))
        lam = F(1, n)
        assert variance_value_of_poly(ze, n, lam) == lam / (1 + lam) ** 2
    _pass(4, "variance window corpus", start, 300)


def test_criterion_05_triangle_free_spot_checks():
    start = time.monotonic()
    named = [cycle_graph(5), complete_bipartite(3, 3), petersen_graph()]
    rng = SplitMix64(50505)
    randoms = []
    while len(randoms) < 100:
        g = corpus.random_triangle_free_graph(4 + rng.randrange(9), rng)
        if g.max_degree >= 1:
            randoms.append(g)
    for g in named + randoms:
        lam = F(1, 100 * g.max_degree ** 4)
        check = bounds.check_occupancy_tf(g, lam)
        assert check.status == HOLDS, (g.display_name(), check.status)
        assert check.margin > 0
    _pass(5, "triangle-free occupancy floor spot checks", start, 300)


def test_criterion_06_series_prover():
    start = time.monotonic()
    assert series.verify_t_coefficients()["ok"]
    assert series.verify_tprime_coefficients()["ok"]
    assert series.verify_g_cubic()["ok"]
    assert series.verify_fidentity()["ok"]
    for spec in ("cycle:5", "petersen", "kab:1,2", "kab:3,3"):
        rep = series.verify_b_coefficients(generate(spec))
        assert rep["ok"], (spec, rep["checks"])
    _pass(6, "series prover", start, 60)


def test_criterion_07_p5_threshold():
    start = time.monotonic()
    checks = {c.name: c for c in bounds.check_p5_threshold()}
    at33 = checks["variance.p5_exceeds_ceiling_at_33"]
    assert at33.holds and at33.margin > 0
    root = checks["variance.p5_threshold_root"]
    assert root.holds
    lo, hi = root.lhs
    assert F(32) <= lo < hi <= F(33)
    at1 = checks["variance.p5_below_ceiling_at_1"]
    assert at1.holds
    _pass(7, "five-vertex path threshold", start, 5)


def test_criterion_08_oracle_equivalence():
    start = time.monotonic()
    total = 0
    for n in range(1, 9):
        for g in corpus.all_graphs(n):
            assert independence_polynomial(g) == brute_force_polynomial(g)
            total += 1
    assert total == 13598

    rng = SplitMix64(80808)
    for _ in range(200):
        n = 9 + rng.randrange(4)
        g = corpus.random_graph(n, rng)
        assert independence_polynomial(g) == brute_force_polynomial(g)

    for n in range(3, 21):
        assert cycle_polynomial(n) == independence_polynomial(cycle_graph(n))
    _pass(8, "oracle equivalence", start, 300)


def test_criterion_09_local_occupancy_corpus():
    start = time.monotonic()
    lams = (F(1, 2), F(1), F(2))
    weights = [(lam, 1 + 1 / lam, lam / (1 + lam)) for lam in lams]
    for g in corpus.connected_corpus(7):
        memo: dict[int, tuple[int, ...]] = {}
        full = (1 << g.n) - 1
        # neighborhood certificate at beta = 1 + 1/lam, gamma = 1
        for u in range(g.n):
            neighbors = [v for v in range(g.n) if g.adj[u] >> v & 1]
            for picks in range(1 << len(neighbors)):
                mask = 0
                for i, v in enumerate(neighbors):
                    if picks >> i & 1:
                        mask |= 1 << v
                zf = subset_polynomial(g, mask, memo)
                dzf = zf.derivative()
                for lam, beta, s in weights:
                    zv = F(zf.evaluate(lam))
                    value = beta * s / zv + lam * dzf.evaluate(lam) / zv
                    assert value >= 1, (g.label, lam, u, mask)
        # clique-weighted marginal averages are at least one
        z = independence_polynomial(g)
        rests = [subset_polynomial(g, full & ~g.closed_mask(u), memo)
                 for u in range(g.n)]
        for lam in lams:
            zv = F(z.evaluate(lam))
            total = sum(
                lam * rests[u].evaluate(lam) / zv
                * (1 / lam + g.degree(u) + 1)
                for u in range(g.n)
            )
            assert total >= g.n, (g.label, lam)
    _pass(9, "local occupancy corpus", start, 600)


def test_criterion_10_implication_web():
    start = time.monotonic()
    rng = SplitMix64(101010)
    for _ in range(10**4):
        p, q = orderings.random_generating_pair(rng)
        report = orderings.implication_web_check(p, q)
        assert not report["violations"], (p, q, report["violations"])
    _pass(10, "implication web", start, 120)


def test_criterion_11_combined_chain():
    start = time.monotonic()
    pool = [g for g in corpus.connected_corpus(8) if g.edge_count >= 1]
    rng = SplitMix64(111111)
    picked: list[int] = []
    while len(picked) < 50:
        i = rng.randrange(len(pool))
        if i not in picked:
            picked.append(i)
    for i in sorted(picked):
        g = pool[i]
        for lam in (F(1, 4), F(1), F(4)):
            for check in bounds.check_combined_chain(g, lam):
                assert check.holds, (g.label, lam, check.name, check.status)

    # Edgeless equality case: both enclosures at width <= 1e-15 must overlap.
    tol = F(1, 10**16)
    lam = F(1)
    z = independence_polynomial(empty_graph(3))
    lower = log1p_interval(lam, tol) * ((1 + lam) / lam) * F(1, 2)
    fe = free_energy_interval(z, 3, lam, tol)
    assert lower.width <= F(1, 10**15) and fe.width <= F(1, 10**15)
    assert lower.intersects(fe)
    _pass(11, "expectation / free-energy chain", start, 300)


def test_criterion_12_sampler_cross_validation():
    start = time.monotonic()
    from hardcore_lab.hardcore import variance_value

    assert len(CROSS_VALIDATION_CASES) == 20
    for spec, lam, seed in CROSS_VALIDATION_CASES:
        g = generate(spec)
        rep = estimate(g, lam, 10**6, 10**4, seed=seed)
        exact_mean = float(g.n * occupancy_value(g, lam))
        exact_var = float(g.n * variance_value(g, lam))
        assert abs(rep.mean_size - exact_mean) <= 3 * rep.se_mean, spec
        assert abs(rep.var_size - exact_var) <= 3 * rep.se_var, spec

    # byte-level reproducibility of a fixed-seed report
    g = generate("kab:3,3")
    a = estimate(g, F(1), 10**5, 10**3, seed=77)
    b = estimate(g, F(1), 10**5, 10**3, seed=77)
    assert a.to_json() == b.to_json()
    _pass(12, "sampler cross-validation", start, 300)


def test_edge_count_identity_exhaustive():
    # companion invariant, riding on the cached n <= 8 enumeration
    for n in range(1, 9):
        for g in corpus.all_graphs(n):
            if not g.is_triangle_free():
                continue
            for u in range(g.n):
                assert g.tf_edge_count_identity(u)
