"""Sturm chains, positive real root isolation, and the half-line
nonnegativity decision procedure.

Everything here is exact: interval endpoints and witnesses are rationals and
no verdict ever depends on floating point.  Internally the chains are kept as
primitive integer coefficient lists (positive rescaling never changes a sign
variation), which keeps the arithmetic in fast machine integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .polynomials import Poly
from .verdict import FAILS, HOLDS, Verdict

Coeffs = tuple[int, ...]


# -- integer polynomial kernels ------------------------------------------

def _strip(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _int_primitive(cs: list[int]) -> Coeffs:
    g = 0
    for c in cs:
        g = gcd(g, c)
    if g in (0, 1):
        return tuple(cs)
    return tuple(c // g for c in cs)


def _to_ints(p: Poly) -> Coeffs:
    return p.primitive().coeffs


def _pseudo_rem(f: Coeffs, g: Coeffs) -> tuple[list[int], int]:
    """Integer pseudo-remainder: (r, s) with r = lc(g)^s * (f mod g)."""
    work = list(f)
    lg = g[-1]
    steps = 0
    while work and len(work) >= len(g):
        top = work.pop()
        shift = len(work) - (len(g) - 1)
        for i in range(len(work)):
            work[i] *= lg
        for i in range(len(g) - 1):
            work[shift + i] -= top * g[i]
        steps += 1
        _strip(work)
    return work, steps


def _int_gcd(f: Coeffs, g: Coeffs) -> Coeffs:
    f = _int_primitive(list(f))
    g = _int_primitive(list(g))
    while g:
        r, _ = _pseudo_rem(f, g)
        f, g = g, _int_primitive(r)
    return f


def _int_exact_div(f: Coeffs, g: Coeffs) -> Coeffs:
    """Quotient f / g when the division is exact over the rationals and the
    quotient is integral (both inputs primitive)."""
    work = list(f)
    out = [0] * (len(f) - len(g) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = work[i + len(g) - 1]
        q, r = divmod(c, g[-1])
        assert r == 0, "inexact integer polynomial division"
        out[i] = q
        if q:
            for j in range(len(g)):
                work[i + j] -= q * g[j]
    assert not any(work), "inexact integer polynomial division"
    return tuple(out)


def _derivative(cs: Coeffs) -> Coeffs:
    return tuple(i * c for i, c in enumerate(cs) if i)


def _int_squarefree(cs: Coeffs) -> Coeffs:
    g = _int_gcd(cs, _derivative(cs))
    if len(g) <= 1:
        return cs
    return _int_primitive(list(_int_exact_div(cs, g)))


def _eval_sign(cs: Coeffs, x: Fraction) -> int:
    """Sign of the polynomial at a rational point, in integer arithmetic."""
    num, den = x.numerator, x.denominator
    acc = 0
    dp = 1
    for c in reversed(cs):
        acc = acc * num + c * dp
        dp *= den
    return (acc > 0) - (acc < 0)


def _int_chain(cs: Coeffs) -> list[Coeffs]:
    """Sturm chain of the squarefree part, as primitive integer polynomials.

    Pseudo-remainders scale the true remainder by lc(g)^s; an odd power of a
    negative leading coefficient flips the sign, which is compensated before
    the negated remainder joins the chain.
    """
    q = _int_squarefree(cs)
    chain = [q, _int_primitive(list(_derivative(q)))]
    while chain[-1]:
        r, steps = _pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        flip = -1 if (chain[-1][-1] < 0 and steps % 2) else 1
        chain.append(_int_primitive([-flip * c for c in r]))
    return chain


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def _chain_variations(chain: list[Coeffs], x: Fraction) -> int:
    return _variations(_eval_sign(cs, x) for cs in chain)


def _chain_count(chain: list[Coeffs], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return _chain_variations(chain, a) - _chain_variations(chain, b)


def _int_root_bound(cs: Coeffs) -> Fraction:
    lc = abs(cs[-1])
    bound = 1 + Fraction(max(abs(c) for c in cs[:-1]), lc) if len(cs) > 1 else Fraction(1)
    b = Fraction(1)
    while b < bound:
        b *= 2
    return b


# -- public wrappers ---------------------------------------------------------

def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain of the squarefree part of p, in primitive integer form."""
    if p.is_zero:
        raise ValueError("no Sturm chain for the zero polynomial")
    return [Poly(cs) for cs in _int_chain(_to_ints(p))]


def variations_at(chain: list[Poly], x) -> int:
    return _variations(_eval_sign(p.coeffs, Fraction(x)) for p in chain)


def count_roots(chain: list[Poly], a, b) -> int:
    """Number of distinct real roots in (a, b]."""
    return variations_at(chain, a) - variations_at(chain, b)


def cauchy_root_bound(p: Poly) -> Fraction:
    """Power-of-two upper bound on the absolute value of every root of p."""
    cs = _to_ints(p)
    if len(cs) <= 1:
        return Fraction(1)
    return _int_root_bound(cs)


def _isolate(chain: list[Coeffs]) -> list[tuple[Fraction, Fraction]]:
    bound = _int_root_bound(chain[0]) if len(chain[0]) > 1 else Fraction(1)
    intervals: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(0), bound, _chain_count(chain, Fraction(0), bound))]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            intervals.append((a, b))
            continue
        mid = (a + b) / 2
        kl = _chain_count(chain, a, mid)
        stack.append((a, mid, kl))
        stack.append((mid, b, k - kl))
    intervals.sort()
    return intervals


def _refine(chain: list[Coeffs], lo: Fraction, hi: Fraction, width) -> tuple[Fraction, Fraction]:
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _chain_count(chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def isolate_positive_roots(p: Poly, max_width=None) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, each containing exactly one root of p in
    (0, oo).

    Intervals are half-open (lo, hi] and sorted increasingly; pass max_width
    to refine each below a requested width.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    cs = _to_ints(p)
    cs = cs[next(i for i, c in enumerate(cs) if c):]  # x = 0 is excluded anyway
    if len(cs) <= 1:
        return []
    chain = _int_chain(cs)
    intervals = _isolate(chain)
    if max_width is not None:
        width = Fraction(max_width)
        intervals = [_refine(chain, lo, hi, width) for lo, hi in intervals]
    return intervals


def refine_root_interval(p: Poly, lo, hi, width) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of p below the given width."""
    cs = _to_ints(p)
    return _refine(_int_chain(cs), Fraction(lo), Fraction(hi), Fraction(width))


# -- decision procedures ----------------------------------------------------

def _simplify_witness(cs: Coeffs, x: Fraction) -> Fraction:
    """Walk the Stern-Brocot tree toward x, returning the first mediant that
    still certifies a negative value; keeps reported witnesses readable."""
    if _eval_sign(cs, x) >= 0:
        raise ValueError("witness candidate does not certify failure")
    lo_n, lo_d = 0, 1
    hi_n, hi_d = 1, 0
    for _ in range(128):
        m_n, m_d = lo_n + hi_n, lo_d + hi_d
        m = Fraction(m_n, m_d)
        if _eval_sign(cs, m) < 0:
            return m
        if m < x:
            lo_n, lo_d = m_n, m_d
        else:
            hi_n, hi_d = m_n, m_d
    return x


def _witness_near_zero(cs: Coeffs) -> Fraction:
    x = Fraction(1)
    while _eval_sign(cs, x) >= 0:
        x /= 2
    return _simplify_witness(cs, x)


def _witness_beyond(cs: Coeffs, start: Fraction) -> Fraction:
    x = start if start > 0 else Fraction(1)
    while _eval_sign(cs, x) >= 0:
        x *= 2
    return _simplify_witness(cs, x)


def nonneg_on_halfline(p: Poly) -> Verdict:
    """Decide exactly whether p(x) >= 0 for all x >= 0.

    Necessary sign checks at 0 and at infinity come first, then cheap sign
    sampling to catch failures early; to certify a hold, the distinct
    positive roots of the squarefree part are isolated and the sign of p is
    sampled strictly between consecutive isolating intervals and beyond the
    last one.  Sign is constant between consecutive distinct roots, so the
    procedure is complete.
    """
    if p.is_zero:
        return Verdict(HOLDS)
    cs = _to_ints(p)

    def fail_at(w: Fraction) -> Verdict:
        return Verdict(FAILS, witness=w, margin=Fraction(p.evaluate(w)))

    if cs[0] < 0:
        return fail_at(Fraction(0))
    if cs[-1] < 0:
        return fail_at(_witness_beyond(cs, _int_root_bound(cs)))
    if all(c >= 0 for c in cs):
        return Verdict(HOLDS)

    val = next(i for i, c in enumerate(cs) if c)
    r = cs[val:]
    if r[0] < 0:
        return fail_at(_witness_near_zero(cs))

    bound = _int_root_bound(r)
    probe = Fraction(1, 4)
    while probe <= 2 * bound:
        if _eval_sign(cs, probe) < 0:
            return fail_at(_simplify_witness(cs, probe))
        probe *= 4

    chain = _int_chain(r)
    intervals = _isolate(chain)

    # Refine until consecutive intervals leave a gap to sample in.
    for i in range(len(intervals) - 1):
        lo1, hi1 = intervals[i]
        lo2, hi2 = intervals[i + 1]
        while hi1 >= lo2:
            lo1, hi1 = _refine(chain, lo1, hi1, (hi1 - lo1) / 2)
            lo2, hi2 = _refine(chain, lo2, hi2, (hi2 - lo2) / 2)
        intervals[i] = (lo1, hi1)
        intervals[i + 1] = (lo2, hi2)

    samples = [(hi1 + lo2) / 2 for (_, hi1), (lo2, _) in zip(intervals, intervals[1:])]
    if intervals:
        samples.append(intervals[-1][1] + 1)
    for s in samples:
        if _eval_sign(cs, s) < 0:
            return fail_at(_simplify_witness(cs, s))
    return Verdict(HOLDS)


def nonneg_on_segment(p: Poly, a, b) -> Verdict:
    """Decide exactly whether p >= 0 on the closed segment [a, b].

    Reduces to the half-line decision through the substitution
    x = a + (b - a) t / (1 + t), which maps t in [0, oo) onto [a, b).
    """
    a, b = Fraction(a), Fraction(b)
    if b < a:
        raise ValueError("empty segment")
    if p.evaluate(b) < 0:
        return Verdict(FAILS, witness=b, margin=Fraction(p.evaluate(b)))
    if p.is_zero or a == b:
        return Verdict(HOLDS)
    n = p.degree
    one_plus_t = Poly([1, 1])
    inner = Poly([a, b])  # a(1+t) + (b-a)t
    seg = Poly()
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        seg = seg + (inner ** i) * (one_plus_t ** (n - i)) * c
    v = nonneg_on_halfline(seg)
    if v.fails:
        t = v.witness
        x = a + (b - a) * t / (1 + t)
        return Verdict(FAILS, witness=x, margin=Fraction(p.evaluate(x)))
    return v
