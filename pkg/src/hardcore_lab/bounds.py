"""Mechanical verification of the displayed extremal bounds at exact or
certified precision.

Exact comparisons clear logarithms to integer-power comparisons of rationals
and never return inconclusive.  Transcendental comparisons go through
rational-interval enclosures; when enclosures overlap, the tolerance is
refined by factors of ten down to a floor before reporting inconclusive, so
rounding can never masquerade as a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .graphs import Graph, bits_of, cycle_graph, path_graph
from .hardcore import (
    cycle_polynomial,
    independence_polynomial,
    occupancy_value,
    subset_polynomial,
    var_numerator,
    variance_value_of_poly,
)
from .intervals import (
    RationalInterval,
    entropy_interval,
    free_energy_interval,
    lambert_w_interval,
    log1p_interval,
    log_interval,
)
from .polynomials import Poly
from .roots import isolate_positive_roots
from .verdict import FAILS, HOLDS, INCONCLUSIVE, format_rational

DEFAULT_TOL = Fraction(1, 10**9)
TOL_FLOOR = Fraction(1, 10**30)


@dataclass
class BoundCheck:
    """One verified comparison, in the report currency shared by the corpus
    runner and the command line."""

    name: str
    graph: str
    lam: Fraction | None
    status: str
    lhs: object = None
    rhs: object = None
    margin: object = None
    witness: object = None
    note: str | None = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_json(self) -> dict:
        out = {
            "bound": self.name,
            "graph": self.graph,
            "lambda": format_rational(self.lam) if self.lam is not None else None,
            "status": self.status,
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "margin": _render(self.margin),
        }
        if self.witness is not None:
            out["witness"] = _render(self.witness)
        if self.note:
            out["note"] = self.note
        return out


def _render(value):
    if value is None:
        return None
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, RationalInterval):
        return value.to_json()
    if isinstance(value, tuple):
        return [_render(v) for v in value]
    return str(value)


def _exact_le(name: str, g: Graph, lam, lhs: Fraction, rhs: Fraction,
              note: str | None = None, witness=None) -> BoundCheck:
    status = HOLDS if lhs <= rhs else FAILS
    return BoundCheck(
        name=name,
        graph=g.display_name(),
        lam=Fraction(lam) if lam is not None else None,
        status=status,
        lhs=lhs,
        rhs=rhs,
        margin=rhs - lhs,
        witness=witness if status == FAILS else None,
        note=note,
    )


def _interval_le(name: str, g: Graph, lam, make_lhs, make_rhs, tol,
                 note: str | None = None) -> BoundCheck:
    """Certify lhs <= rhs where either side is an enclosure factory tol -> value."""
    tol = Fraction(tol)
    while True:
        lhs = make_lhs(tol)
        rhs = make_rhs(tol)
        lhs_i = lhs if isinstance(lhs, RationalInterval) else RationalInterval.point(lhs)
        rhs_i = rhs if isinstance(rhs, RationalInterval) else RationalInterval.point(rhs)
        if lhs_i.certainly_le(rhs_i):
            return BoundCheck(name, g.display_name(), Fraction(lam), HOLDS,
                              lhs=lhs, rhs=rhs, margin=rhs_i.lo - lhs_i.hi, note=note)
        if rhs_i.certainly_lt(lhs_i):
            return BoundCheck(name, g.display_name(), Fraction(lam), FAILS,
                              lhs=lhs, rhs=rhs, margin=rhs_i.hi - lhs_i.lo,
                              witness=(lhs_i, rhs_i), note=note)
        if tol <= TOL_FLOOR:
            return BoundCheck(name, g.display_name(), Fraction(lam), INCONCLUSIVE,
                              lhs=lhs, rhs=rhs,
                              margin=RationalInterval(rhs_i.lo - lhs_i.hi, rhs_i.hi - lhs_i.lo),
                              note=note)
        tol /= 10


# -- partition-function helpers ----------------------------------------------

def bipartite_partition_value(a: int, b: int, lam: Fraction) -> Fraction:
    """Z of the complete bipartite graph on parts a, b at a rational point."""
    return (1 + lam) ** a + (1 + lam) ** b - 1


def bipartite_occupancy_value(a: int, b: int, lam: Fraction) -> Fraction:
    num = lam * (a * (1 + lam) ** (a - 1) + b * (1 + lam) ** (b - 1))
    return num / ((a + b) * bipartite_partition_value(a, b, lam))


def clique_occupancy_value(d: int, lam: Fraction) -> Fraction:
    """Expected occupied fraction of the (d+1)-clique: lam / (1 + (d+1) lam)."""
    return lam / (1 + (d + 1) * lam)


# -- free energy -----------------------------------------------------------

def check_free_energy_bounds(g: Graph, lam) -> list[BoundCheck]:
    """Every displayed free-energy comparison, decided exactly by clearing
    logarithms to cross-power comparisons over the rationals."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    z = independence_polynomial(g)
    zv = Fraction(z.evaluate(lam))
    n = g.n
    out = []

    # (1/n) log(1 + n lam) <= (1/n) log Z  <=>  1 + n lam <= Z
    out.append(_exact_le("free_energy.complete_floor", g, lam, 1 + n * lam, zv))
    # (1/n) log Z <= log(1 + lam)  <=>  Z <= (1 + lam)^n
    out.append(_exact_le("free_energy.edgeless_ceiling", g, lam, zv, (1 + lam) ** n))

    delta = g.max_degree
    if delta >= 1:
        # (1/(d+1)) log(1+(d+1)lam) <= (1/n) log Z, valid for max degree d.
        out.append(_exact_le(
            "free_energy.clique_floor", g, lam,
            (1 + (delta + 1) * lam) ** n, zv ** (delta + 1)))
        degs = g.degrees()
        if all(d == delta for d in degs):
            # (1/n) log Z <= (1/2d) log(2(1+lam)^d - 1), regular graphs only.
            out.append(_exact_le(
                "free_energy.biregular_ceiling", g, lam,
                zv ** (2 * delta), (2 * (1 + lam) ** delta - 1) ** n))

    # Degree-sequence floor: prod_u Z_{K_{d_u+1}}^{1/(d_u+1)} <= Z, cleared by
    # the lcm of the exponent denominators.
    m = lcm(*(d + 1 for d in g.degrees())) if n else 1
    floor_prod = Fraction(1)
    for u in range(n):
        floor_prod *= (1 + (g.degree(u) + 1) * lam) ** (m // (g.degree(u) + 1))
    out.append(_exact_le("free_energy.degree_floor", g, lam, floor_prod, zv ** m))

    # Degree-sequence ceiling: edge-based product of biclique terms, with the
    # separate edgeless-vertex factor as displayed.
    edges = g.edges()
    if edges or any(d == 0 for d in g.degrees()):
        me = lcm(*(g.degree(u) * g.degree(v) for u, v in edges)) if edges else 1
        ceil_prod = Fraction(1)
        for u, v in edges:
            du, dv = g.degree(u), g.degree(v)
            ceil_prod *= bipartite_partition_value(du, dv, lam) ** (me // (du * dv))
        isolated = sum(1 for d in g.degrees() if d == 0)
        ceil_prod *= ((1 + lam) ** isolated) ** me
        out.append(_exact_le("free_energy.degree_ceiling", g, lam, zv ** me, ceil_prod))
    return out


def check_vertex_f_upper_counterexample(g: Graph, lam) -> BoundCheck:
    """The vertex-based biclique ceiling (1/n) sum_u F_{K_{d_u, d_u}}: a
    natural guess that fails; the comparison is decided exactly and the
    verdict simply reports which way it went."""
    lam = Fraction(lam)
    if g.n == 0 or min(g.degrees()) < 1:
        raise ValueError("vertex-based ceiling needs minimum degree one")
    z = independence_polynomial(g)
    zv = Fraction(z.evaluate(lam))
    m = lcm(*(2 * d for d in g.degrees()))
    rhs = Fraction(1)
    for u in range(g.n):
        d = g.degree(u)
        rhs *= (2 * (1 + lam) ** d - 1) ** (m // (2 * d))
    return _exact_le("free_energy.vertex_biregular_ceiling", g, lam, zv ** m, rhs)


# -- occupancy ---------------------------------------------------------------

def check_occupancy_bounds(g: Graph, lam) -> list[BoundCheck]:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    e = occupancy_value(g, lam)
    n = g.n
    out = [
        _exact_le("occupancy.complete_floor", g, lam, lam / (1 + n * lam), e),
        _exact_le("occupancy.edgeless_ceiling", g, lam, e, lam / (1 + lam)),
    ]
    delta = g.max_degree
    if delta >= 1:
        out.append(_exact_le(
            "occupancy.clique_floor", g, lam, clique_occupancy_value(delta, lam), e))
        if all(d == delta for d in g.degrees()):
            out.append(_exact_le(
                "occupancy.biregular_ceiling", g, lam,
                e, bipartite_occupancy_value(delta, delta, lam)))
    in_range = lam <= Fraction(3, (delta + 1) ** 2)
    lhs = sum(clique_occupancy_value(d, lam) for d in g.degrees()) / n
    out.append(_exact_le(
        "occupancy.degree_floor", g, lam, lhs, e,
        note=None if in_range else "outside the guaranteed fugacity range; exploratory"))
    return out


def degree_floor_value(g: Graph, lam: Fraction) -> Fraction:
    """(1/n) sum_u lam / (1 + (d_u + 1) lam)."""
    return sum(clique_occupancy_value(d, Fraction(lam)) for d in g.degrees()) / g.n


def check_occupancy_tf(g: Graph, lam, tol=DEFAULT_TOL) -> BoundCheck:
    """Triangle-free degree-sequence floor with the Lambert-W weight,
    certified by enclosures: (1/n) sum_u (lam/(1+lam)) W(d_u L)/(d_u L) with
    L = log(1+lam) must not exceed the exact occupancy fraction."""
    lam = Fraction(lam)
    if not g.is_triangle_free():
        raise ValueError("triangle-free floor requires a triangle-free graph")
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    e = occupancy_value(g, lam)
    s = lam / (1 + lam)
    degree_counts: dict[int, int] = {}
    for d in g.degrees():
        degree_counts[d] = degree_counts.get(d, 0) + 1

    def lhs(tol: Fraction) -> RationalInterval:
        per = tol / (2 * len(degree_counts))
        acc = RationalInterval.point(0)
        log_enc = log1p_interval(lam, per / 4)
        while log_enc.lo <= 0:
            per /= 10
            log_enc = log1p_interval(lam, per / 4)
        for d, count in degree_counts.items():
            if d == 0:
                term = RationalInterval.point(s)
            else:
                arg = log_enc * d
                w_lo = lambert_w_interval(arg.lo, per / 4)
                w_hi = lambert_w_interval(arg.hi, per / 4)
                w_enc = RationalInterval(w_lo.lo, w_hi.hi)
                term = w_enc / (log_enc * d) * s
            acc = acc + term * Fraction(count, g.n)
        return acc

    return _interval_le("occupancy.triangle_free_degree_floor", g, lam,
                        lhs, lambda _: e, tol)


def tf_weight_interval(d: int, lam: Fraction, tol) -> RationalInterval:
    """Enclosure of the triangle-free weight (lam/(1+lam)) W(d L)/(d L)."""
    lam = Fraction(lam)
    tol = Fraction(tol)
    s = lam / (1 + lam)
    if d == 0:
        return RationalInterval.point(s)
    log_enc = log1p_interval(lam, tol / 4)
    while log_enc.lo <= 0:
        tol /= 10
        log_enc = log1p_interval(lam, tol / 4)
    arg = log_enc * d
    w_enc = RationalInterval(
        lambert_w_interval(arg.lo, tol / 4).lo,
        lambert_w_interval(arg.hi, tol / 4).hi,
    )
    return w_enc / (log_enc * d) * s


# -- variance -----------------------------------------------------------------

def check_variance_bounds(g: Graph, lam) -> list[BoundCheck]:
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    z = independence_polynomial(g)
    v = variance_value_of_poly(z, g.n, lam)
    n = g.n
    floor_note = None if lam < Fraction(1, 2 * n - 1) else \
        "outside the guaranteed fugacity window; exploratory"
    ceil_note = None if lam <= Fraction(1, n) else \
        "outside the guaranteed fugacity window; exploratory"
    out = [
        _exact_le("variance.complete_floor", g, lam,
                  lam / (1 + n * lam) ** 2, v, note=floor_note),
        _exact_le("variance.edgeless_ceiling", g, lam,
                  v, lam / (1 + lam) ** 2, note=ceil_note),
    ]
    delta = g.max_degree
    conj = _exact_le("variance.clique_floor_conjecture", g, lam,
                     lam / (1 + (delta + 1) * lam) ** 2, v,
                     note="conjectured range-unrestricted floor; exploratory")
    out.append(conj)
    return out


def p5_variance_gap_numerator() -> Poly:
    """Numerator of V_{P5} - lam/(1+lam)^2 over the manifestly positive
    denominator n Z^2 (1+lam)^2."""
    z = independence_polynomial(path_graph(5))
    one_plus = Poly([1, 1])
    return var_numerator(z) * one_plus * one_plus - 5 * Poly([0, 1]) * z * z


def check_p5_threshold() -> list[BoundCheck]:
    """The five-vertex path has variance fraction above the edgeless ceiling
    from 33 on: strict inequality at 33 exactly, the last sign change pinned
    inside (32, 33], and failure at 1."""
    g = path_graph(5)
    z = independence_polynomial(g)
    gap = p5_variance_gap_numerator()
    out = []

    v33 = variance_value_of_poly(z, 5, 33)
    ceiling33 = Fraction(33, 34 ** 2)
    out.append(BoundCheck(
        "variance.p5_exceeds_ceiling_at_33", g.display_name(), Fraction(33),
        HOLDS if v33 > ceiling33 else FAILS, lhs=ceiling33, rhs=v33,
        margin=v33 - ceiling33))

    v1 = variance_value_of_poly(z, 5, 1)
    out.append(BoundCheck(
        "variance.p5_below_ceiling_at_1", g.display_name(), Fraction(1),
        HOLDS if v1 <= Fraction(1, 4) else FAILS, lhs=v1, rhs=Fraction(1, 4),
        margin=Fraction(1, 4) - v1))

    intervals = isolate_positive_roots(gap, max_width=Fraction(1, 1000))
    last = intervals[-1] if intervals else None
    pinned = last is not None and Fraction(32) <= last[0] and last[1] <= Fraction(33)
    positive_tail = gap.lc > 0 and gap.evaluate(33) > 0
    out.append(BoundCheck(
        "variance.p5_threshold_root", g.display_name(), None,
        HOLDS if pinned and positive_tail else FAILS,
        lhs=last, rhs=(Fraction(32), Fraction(33)),
        note="largest sign change of the gap numerator, isolated to width 1/1000"))
    return out


def cycle_growth_ratio(n: int, lam) -> Fraction:
    """V_{C_n}(lam) / (lam/(1+lam)^2), exactly."""
    lam = Fraction(lam)
    z = cycle_polynomial(n)
    v = variance_value_of_poly(z, n, lam)
    return v * (1 + lam) ** 2 / lam


def check_cycle_growth(n: int, lams=(100, 10000)) -> BoundCheck:
    """Finite-size growth of the variance-to-ceiling ratio along a fugacity
    ladder (the limiting statement is out of scope at desk scale)."""
    lams = [Fraction(l) for l in lams]
    ratios = [cycle_growth_ratio(n, l) for l in lams]
    increasing = all(a < b for a, b in zip(ratios, ratios[1:]))
    g = cycle_graph(n) if n <= 64 else None
    name = g.display_name() if g else f"cycle:{n}"
    return BoundCheck(
        "variance.cycle_ratio_growth", name, lams[-1],
        HOLDS if increasing else FAILS,
        lhs=tuple(ratios), rhs=None,
        note="exact ratios along the fugacity ladder " + ",".join(map(format_rational, lams)))


# -- local occupancy -----------------------------------------------------------

def check_local_occupancy(g: Graph, beta, gamma, lam,
                          max_degree_budget: int = 20) -> BoundCheck:
    """Exhaustive check of the per-vertex neighborhood inequality family:
    for every u and every induced subgraph F of G[N(u)],
    beta (lam/(1+lam)) / Z_F + gamma lam Z_F' / Z_F >= 1."""
    lam, beta, gamma = Fraction(lam), Fraction(beta), Fraction(gamma)
    if g.max_degree > max_degree_budget:
        raise ValueError("neighborhood subset enumeration budget exceeded")
    s = lam / (1 + lam)
    memo: dict[int, tuple[int, ...]] = {}
    worst = None
    for u in range(g.n):
        neighbors = list(bits_of(g.adj[u]))
        for picks in range(1 << len(neighbors)):
            mask = 0
            for i, v in enumerate(neighbors):
                if picks >> i & 1:
                    mask |= 1 << v
            zf = subset_polynomial(g, mask, memo)
            zfv = Fraction(zf.evaluate(lam))
            value = beta * s / zfv + gamma * lam * zf.derivative().evaluate(lam) / zfv
            if worst is None or value < worst[0]:
                worst = (value, u, mask)
    if worst is None:
        return BoundCheck("local_occupancy.certificate", g.display_name(), lam, HOLDS,
                          lhs=1, rhs=1, margin=0)
    value, u, mask = worst
    status = HOLDS if value >= 1 else FAILS
    return BoundCheck(
        "local_occupancy.certificate", g.display_name(), lam, status,
        lhs=1, rhs=value, margin=value - 1,
        witness=None if status == HOLDS else (u, sorted(bits_of(mask))),
        note=f"beta={format_rational(beta)} gamma={format_rational(gamma)}")


def check_weighted_marginal_sum(g: Graph, lam, weight: str = "clique",
                                tol=DEFAULT_TOL) -> BoundCheck:
    """Average marginal weighted by the reciprocal occupancy weight is at
    least one: exactly for the clique weight, by enclosure for the
    triangle-free Lambert-W weight."""
    lam = Fraction(lam)
    z = independence_polynomial(g)
    full = (1 << g.n) - 1
    memo: dict[int, tuple[int, ...]] = {}
    zv = Fraction(z.evaluate(lam))
    marginals = [
        lam * subset_polynomial(g, full & ~g.closed_mask(u), memo).evaluate(lam) / zv
        for u in range(g.n)
    ]
    if weight == "clique":
        total = sum(p / clique_occupancy_value(g.degree(u), lam)
                    for u, p in enumerate(marginals)) / g.n
        return _exact_le("local_occupancy.clique_weighted_marginals", g, lam,
                         Fraction(1), total)
    if weight != "triangle_free":
        raise ValueError(f"unknown weight {weight!r}")
    if not g.is_triangle_free():
        raise ValueError("triangle-free weight requires a triangle-free graph")

    def rhs(tol: Fraction) -> RationalInterval:
        acc = RationalInterval.point(0)
        per = tol / (2 * g.n)
        cache: dict[int, RationalInterval] = {}
        for u, p in enumerate(marginals):
            d = g.degree(u)
            enc = cache.get(d)
            if enc is None:
                enc = tf_weight_interval(d, lam, per)
                cache[d] = enc
            acc = acc + RationalInterval.point(p) / enc * Fraction(1, g.n)
        return acc

    check = _interval_le("local_occupancy.tf_weighted_marginals", g, lam,
                         lambda _: Fraction(1), rhs, tol)
    return check


# -- combined chain -----------------------------------------------------------

def check_combined_chain(g: Graph, lam, tol=DEFAULT_TOL) -> list[BoundCheck]:
    """The chain linking expectation and free energy:

        ((1+lam) log(1+lam)/lam) E <= F <= E log(lam) + h(E) <= E log(e lam / E)

    certified with outward-rounded enclosures at the given tolerance."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("fugacity must be positive")
    z = independence_polynomial(g)
    e = occupancy_value(g, lam, z)
    if not 0 < e < 1:
        raise ValueError("chain requires 0 < E < 1")

    def free_energy(tol):
        return free_energy_interval(z, g.n, lam, tol)

    def lower(tol):
        return log1p_interval(lam, tol * lam / (2 * (1 + lam))) * ((1 + lam) / lam) * e

    def entropy_form(tol):
        return log_interval(lam, tol / 2) * e + entropy_interval(e, tol / 2)

    def final_form(tol):
        # E log(e lam / E) = E (1 + log lam - log E)
        inner = 1 + (log_interval(lam, tol / 2) - log_interval(e, tol / 2))
        return inner * e

    return [
        _interval_le("combined.expectation_floor", g, lam, lower, free_energy, tol),
        _interval_le("combined.entropy_ceiling", g, lam, free_energy, entropy_form, tol),
        _interval_le("combined.relaxed_ceiling", g, lam, entropy_form, final_form, tol),
        _interval_le("combined.free_energy_vs_relaxed", g, lam, free_energy, final_form, tol),
    ]


# -- edge-based occupancy counterexamples --------------------------------------

def edge_occupancy_sum(g: Graph, lam) -> Fraction:
    """(1/n) sum over edges of ((d_u+d_v)/(d_u d_v)) E_{K_{d_u, d_v}}(lam)."""
    lam = Fraction(lam)
    total = Fraction(0)
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        total += Fraction(du + dv, du * dv) * bipartite_occupancy_value(du, dv, lam)
    return total / g.n


DISPLAYED_OCCUPANCY = {
    "g1": (Poly([0, 6, 16, 12, 4]), 6 * Poly([1, 6, 8, 4, 1])),
    "g2": (Poly([0, 6, 18, 12, 4]), 6 * Poly([1, 6, 9, 4, 1])),
    "pasch": (Poly([0, 10, 66, 126, 80, 30, 6]), 10 * Poly([1, 10, 33, 42, 20, 6, 1])),
}


def check_edge_occ_counterexamples(lam=5) -> list[BoundCheck]:
    """For the three counterexample graphs: the engine-computed occupancy
    fraction matches the pinned closed form identically, and at the given
    fugacity the edge-based sum falls strictly below it."""
    from .graphs import generate
    from .hardcore import occupancy_fraction
    from .polynomials import RatFunc

    lam = Fraction(lam)
    out = []
    for name in ("g1", "g2", "pasch"):
        g = generate(name)
        num, den = DISPLAYED_OCCUPANCY[name]
        displayed = RatFunc(num, den)
        engine = occupancy_fraction(g)
        out.append(BoundCheck(
            "occupancy.closed_form_identity", g.display_name(), None,
            HOLDS if engine == displayed else FAILS,
            lhs=f"{engine.num.to_text()} / {engine.den.to_text()}",
            rhs=f"{displayed.num.to_text()} / {displayed.den.to_text()}"))
        e = occupancy_value(g, lam)
        edge_sum = edge_occupancy_sum(g, lam)
        out.append(BoundCheck(
            "occupancy.edge_ceiling_violation", g.display_name(), lam,
            HOLDS if edge_sum < e else FAILS,
            lhs=edge_sum, rhs=e, margin=e - edge_sum,
            note="the would-be edge-based ceiling falls below the true value"))
    return out
