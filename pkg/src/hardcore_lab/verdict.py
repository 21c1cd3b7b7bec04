"""Outcome of a decision procedure: holds, fails with a witness, or inconclusive."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


def format_rational(x) -> str:
    """Render an exact value the way the CLI expects it ("p/q", or "p" if integral)."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class Verdict:
    """Result of an exact or certified check.

    A ``fails`` verdict always carries a witness (a coefficient index, an exact
    evaluation point, or an interval pair).  ``inconclusive`` only arises from
    enclosure-backed comparisons whose tolerance refinement bottomed out.
    """

    status: str
    witness: object = None
    margin: object = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = _jsonify(self.witness)
        if self.margin is not None:
            out["margin"] = _jsonify(self.margin)
        return out


def _jsonify(value):
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    if isinstance(value, tuple):
        return [_jsonify(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)
