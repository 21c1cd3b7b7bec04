"""Decision procedures for the seven comparison orderings between generating
polynomials with nonnegative coefficients and constant term one, plus the
implication-web harness."""

from __future__ import annotations

import enum
from fractions import Fraction

from .hardcore import var_numerator
from .polynomials import Poly
from .roots import nonneg_on_halfline
from .verdict import FAILS, HOLDS, Verdict


class OrderingKind(enum.Enum):
    COUNT = "COUNT"
    PART = "PART"
    COEF = "COEF"
    OCC = "OCC"
    MAX = "MAX"
    FV = "FV"
    VAR = "VAR"


# Implications provable from the definitions for generating polynomials with
# positive support up to their degree (constant term one).
IMPLICATIONS: tuple[tuple[OrderingKind, OrderingKind], ...] = (
    (OrderingKind.VAR, OrderingKind.OCC),
    (OrderingKind.FV, OrderingKind.OCC),
    (OrderingKind.FV, OrderingKind.COEF),
    (OrderingKind.COEF, OrderingKind.PART),
    (OrderingKind.OCC, OrderingKind.PART),
    (OrderingKind.PART, OrderingKind.COUNT),
    (OrderingKind.PART, OrderingKind.MAX),
)


def _padded(p: Poly, q: Poly) -> tuple[list, list, int]:
    if p.coefficient(0) != 1 or q.coefficient(0) != 1:
        raise ValueError("orderings require constant term 1 on both sides")
    if any(c < 0 for c in p.coeffs) or any(c < 0 for c in q.coeffs):
        raise ValueError("orderings require nonnegative coefficients")
    n = max(p.degree, q.degree, 0)
    return [p.coefficient(k) for k in range(n + 1)], [q.coefficient(k) for k in range(n + 1)], n


def compare(kind: OrderingKind | str, p: Poly, q: Poly) -> Verdict:
    """Decide whether p dominates q in the given ordering, exactly.

    Coefficient-indexed kinds fail with the offending index as witness; the
    pointwise kinds fail with an exact rational point where the defining
    inequality is violated.
    """
    kind = OrderingKind(kind) if not isinstance(kind, OrderingKind) else kind
    a, b, n = _padded(p, q)

    if kind is OrderingKind.COUNT:
        pa, qa = sum(a), sum(b)
        if pa >= qa:
            return Verdict(HOLDS, margin=pa - qa)
        return Verdict(FAILS, witness=Fraction(1), margin=pa - qa)

    if kind is OrderingKind.MAX:
        if a[n] >= b[n]:
            return Verdict(HOLDS, margin=a[n] - b[n])
        return Verdict(FAILS, witness=n, margin=a[n] - b[n])

    if kind is OrderingKind.COEF:
        for k in range(1, n + 1):
            if a[k] < b[k]:
                return Verdict(FAILS, witness=k, margin=a[k] - b[k])
        return Verdict(HOLDS)

    if kind is OrderingKind.FV:
        for k in range(n):
            if b[k] * a[k + 1] < a[k] * b[k + 1]:
                return Verdict(FAILS, witness=k, margin=b[k] * a[k + 1] - a[k] * b[k + 1])
        return Verdict(HOLDS)

    if kind is OrderingKind.PART:
        return nonneg_on_halfline(p - q)

    if kind is OrderingKind.OCC:
        # x p'/p >= x q'/q on x >= 0 reduces to p' q - q' p >= 0 there,
        # since both polynomials are positive on the half-line.
        diff = p.derivative() * q - q.derivative() * p
        v = nonneg_on_halfline(diff)
        if v.fails:
            x = v.witness
            margin = Fraction(x) * diff.evaluate(x) / (p.evaluate(x) * q.evaluate(x))
            return Verdict(FAILS, witness=x, margin=margin)
        return v

    if kind is OrderingKind.VAR:
        cert = var_difference_certificate(p, q)
        v = nonneg_on_halfline(cert)
        if v.fails:
            x = v.witness
            margin = Fraction(cert.evaluate(x)) / (p.evaluate(x) ** 2 * q.evaluate(x) ** 2)
            return Verdict(FAILS, witness=x, margin=margin)
        return v

    raise ValueError(f"unknown ordering kind {kind!r}")


def compare_all(p: Poly, q: Poly) -> dict[OrderingKind, Verdict]:
    return {kind: compare(kind, p, q) for kind in OrderingKind}


def var_difference_certificate(p: Poly, q: Poly) -> Poly:
    """The exact polynomial p^2 q^2 (V_p - V_q); nonnegative on the half-line
    iff p dominates q in the variance ordering."""
    return var_numerator(p) * q * q - var_numerator(q) * p * p


def implication_web_check(p: Poly, q: Poly) -> dict:
    """Evaluate all seven orderings and flag any violated implication.

    A violation would be a counterexample to this implementation, not to the
    implication web itself, which is provable for this polynomial class.
    """
    verdicts = compare_all(p, q)
    violations = [
        (src.value, dst.value)
        for src, dst in IMPLICATIONS
        if verdicts[src].holds and not verdicts[dst].holds
    ]
    return {
        "verdicts": {kind.value: v for kind, v in verdicts.items()},
        "violations": violations,
    }


def random_generating_pair(rng, max_degree: int = 8, max_coeff: int = 50) -> tuple[Poly, Poly]:
    """A random pair of generating polynomials: constant term one and strictly
    positive coefficients up to an independently chosen degree each, the shape
    partition functions take."""
    def draw() -> Poly:
        degree = 1 + rng.randrange(max_degree)
        return Poly([1] + [1 + rng.randrange(max_coeff) for _ in range(degree)])

    return draw(), draw()
