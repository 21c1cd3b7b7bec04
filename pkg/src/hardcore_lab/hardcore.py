"""Exact hard-core model quantities: partition functions, marginals, and the
occupancy and variance fractions, each with an independent second
computation path for cross-checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .graphs import Graph, bits_of
from .polynomials import Poly, RatFunc, lambda_d_dlambda

DEFAULT_MEMO_LIMIT = 1 << 22


class MemoLimitExceeded(RuntimeError):
    """The residual-subgraph cache outgrew its configured bound."""


def _binomial_row(k: int) -> tuple[int, ...]:
    return tuple(comb(k, i) for i in range(k + 1))


def _zpoly_coeffs(adj: tuple[int, ...], mask: int, memo: dict, limit: int) -> tuple[int, ...]:
    cached = memo.get(mask)
    if cached is not None:
        return cached
    best_v, best_d = -1, -1
    for v in bits_of(mask):
        d = (adj[v] & mask).bit_count()
        if d > best_d:
            best_d, best_v = d, v
    if best_d <= 0:
        out = _binomial_row(mask.bit_count())
    else:
        without = _zpoly_coeffs(adj, mask & ~(1 << best_v), memo, limit)
        closed = adj[best_v] | (1 << best_v)
        with_u = _zpoly_coeffs(adj, mask & ~closed, memo, limit)
        out = list(without) + [0] * max(0, len(with_u) + 1 - len(without))
        for i, c in enumerate(with_u):
            out[i + 1] += c
        out = tuple(out)
    if len(memo) >= limit:
        raise MemoLimitExceeded(f"residual cache exceeded {limit} entries")
    memo[mask] = out
    return out


def independence_polynomial(g: Graph, memo_limit: int = DEFAULT_MEMO_LIMIT) -> Poly:
    """Partition function of the hard-core model on g.

    Computed by conditioning on the branch vertex u being unoccupied or
    occupied: Z(S) = Z(S - u) + x * Z(S - N[u]), memoized on the residual
    vertex subset.  The branch vertex is the one of maximum residual degree,
    ties broken by lowest index, so outputs are deterministic.
    """
    memo: dict[int, tuple[int, ...]] = {}
    return Poly(_zpoly_coeffs(g.adj, (1 << g.n) - 1, memo, memo_limit))


def subset_polynomial(g: Graph, mask: int, memo: dict | None = None,
                      memo_limit: int = DEFAULT_MEMO_LIMIT) -> Poly:
    """Partition function of the subgraph induced by a vertex mask."""
    if memo is None:
        memo = {}
    return Poly(_zpoly_coeffs(g.adj, mask, memo, memo_limit))


def brute_force_polynomial(g: Graph) -> Poly:
    """Oracle: enumerate every vertex subset and count the independent ones
    by size.  Kept deliberately naive; the recursion is checked against it."""
    if g.n > 30:
        raise ValueError("brute force capped at 30 vertices")
    adj = g.adj
    counts = [0] * (g.n + 1)
    for mask in range(1 << g.n):
        m = mask
        ok = True
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            counts[mask.bit_count()] += 1
    return Poly(counts)


def path_polynomial(n: int) -> Poly:
    """Z of the n-vertex path via the transfer recurrence
    Z_n = Z_{n-1} + x * Z_{n-2}."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    prev, cur = Poly([1]), Poly([1, 1])  # 0 and 1 vertices
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + Poly([0, 1]) * prev
    return cur


def cycle_polynomial(n: int) -> Poly:
    """Z of the n-cycle: Z_{C_n} = Z_{P_{n-1}} + x * Z_{P_{n-3}}."""
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return path_polynomial(n - 1) + Poly([0, 1]) * path_polynomial(n - 3)


def path_cycle_polynomial(kind: str, n: int) -> Poly:
    if kind == "path":
        return path_polynomial(n)
    if kind == "cycle":
        return cycle_polynomial(n)
    raise ValueError(f"unknown kind {kind!r}")


# -- marginals -----------------------------------------------------------

def marginal(g: Graph, u: int, z: Poly | None = None) -> RatFunc:
    """p_u as a rational function of the fugacity:
    x * Z_{G - N[u]} / Z_G."""
    if z is None:
        z = independence_polynomial(g)
    full = (1 << g.n) - 1
    rest = subset_polynomial(g, full & ~g.closed_mask(u))
    return RatFunc(Poly([0, 1]) * rest, z)


def pair_marginal(g: Graph, u: int, v: int, z: Poly | None = None) -> RatFunc:
    """p_uv for distinct vertices; identically zero when uv is an edge."""
    if u == v:
        raise ValueError("pair marginal needs two distinct vertices")
    if g.has_edge(u, v):
        return RatFunc(Poly())
    if z is None:
        z = independence_polynomial(g)
    full = (1 << g.n) - 1
    rest = subset_polynomial(g, full & ~(g.closed_mask(u) | g.closed_mask(v)))
    return RatFunc(Poly([0, 0, 1]) * rest, z)


# -- occupancy and variance ------------------------------------------------

def occupancy_fraction(g: Graph, z: Poly | None = None) -> RatFunc:
    """E_G = x Z' / (n Z)."""
    if z is None:
        z = independence_polynomial(g)
    return RatFunc(Poly([0, Fraction(1, g.n)]) * z.derivative(), z)


def variance_fraction(g: Graph, z: Poly | None = None) -> RatFunc:
    """V_G = x * d/dx E_G."""
    return lambda_d_dlambda(occupancy_fraction(g, z))


def occupancy_value(g: Graph, lam, z: Poly | None = None) -> Fraction:
    """E_G(lam) by direct exact evaluation (no rational-function reduction)."""
    if z is None:
        z = independence_polynomial(g)
    lam = Fraction(lam)
    return lam * z.derivative().evaluate(lam) / (g.n * Fraction(z.evaluate(lam)))


def variance_value_of_poly(z: Poly, n: int, lam) -> Fraction:
    """V(lam) for partition polynomial z on n vertices:
    lam * ((Z' + lam Z'') Z - lam Z'^2) / (n Z^2)."""
    lam = Fraction(lam)
    zv = Fraction(z.evaluate(lam))
    d1 = z.derivative()
    d1v = d1.evaluate(lam)
    d2v = d1.derivative().evaluate(lam)
    return lam * ((d1v + lam * d2v) * zv - lam * d1v * d1v) / (n * zv * zv)


def variance_value(g: Graph, lam, z: Poly | None = None) -> Fraction:
    if z is None:
        z = independence_polynomial(g)
    return variance_value_of_poly(z, g.n, lam)


def var_numerator(p: Poly) -> Poly:
    """(x^2 p'' + x p') p - x^2 p'^2, the numerator of V_p over p^2."""
    x = Poly([0, 1])
    d1 = p.derivative()
    d2 = d1.derivative()
    return (x * x * d2 + x * d1) * p - x * x * d1 * d1


def var_of_polynomial(p: Poly) -> RatFunc:
    """V_p(x) = (x^2 p'' + x p')/p - x^2 p'^2 / p^2, for a generating
    polynomial with p(0) = 1 and nonnegative coefficients."""
    if p.coefficient(0) != 1:
        raise ValueError("generating polynomial must have constant term 1")
    if any(c < 0 for c in p.coeffs):
        raise ValueError("generating polynomial must have nonnegative coefficients")
    return RatFunc(var_numerator(p), p * p)


def variance_via_marginals(g: Graph) -> RatFunc:
    """Second computation path for V_G through vertex and pair marginals:

        V_G = (1/n) sum_u (p_u + sum_{v != u} p_uv - p_u * sum_v p_v)

    Asserts exact agreement with the derivative route before returning.
    """
    z = independence_polynomial(g)
    full = (1 << g.n) - 1
    memo: dict[int, tuple[int, ...]] = {}
    x = Poly([0, 1])
    single_sum = Poly()
    for u in range(g.n):
        single_sum = single_sum + subset_polynomial(g, full & ~g.closed_mask(u), memo)
    pair_sum = Poly()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            rest = subset_polynomial(g, full & ~(g.closed_mask(u) | g.closed_mask(v)), memo)
            pair_sum = pair_sum + rest
    # Over the common denominator Z^2, with the pair sum counted both ways.
    numerator = x * single_sum * z + 2 * x * x * pair_sum * z - x * x * single_sum * single_sum
    result = RatFunc(numerator * Fraction(1, g.n), z * z)
    direct = variance_fraction(g, z)
    assert result == direct, "marginal and derivative variance paths disagree"
    return result


@dataclass
class HardCoreProfile:
    """All exact quantities for one graph; pair marginals fill lazily."""

    graph: Graph
    z: Poly
    expectation: RatFunc
    variance: RatFunc
    marginals: tuple[RatFunc, ...]
    _pairs: dict[tuple[int, int], RatFunc] = field(default_factory=dict, repr=False)

    def pair_marginal(self, u: int, v: int) -> RatFunc:
        if u == v:
            raise ValueError("pair marginal needs two distinct vertices")
        key = (min(u, v), max(u, v))
        cached = self._pairs.get(key)
        if cached is None:
            cached = pair_marginal(self.graph, *key, z=self.z)
            self._pairs[key] = cached
        return cached


def profile(g: Graph) -> HardCoreProfile:
    z = independence_polynomial(g)
    return HardCoreProfile(
        graph=g,
        z=z,
        expectation=occupancy_fraction(g, z),
        variance=variance_fraction(g, z),
        marginals=tuple(marginal(g, u, z) for u in range(g.n)),
    )
