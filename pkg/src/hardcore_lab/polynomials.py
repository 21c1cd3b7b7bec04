"""Exact univariate polynomials and rational functions over the rationals.

Polynomials are dense coefficient lists, lowest degree first, with trailing
zeros trimmed; equality is therefore canonical-form equality.  Coefficients
are Python ints or Fractions, so all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


def _norm_coeff(c):
    c = Fraction(c) if not isinstance(c, (int, Fraction)) else c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction ----------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "Poly":
        """Parse the comma-separated coefficient format, e.g. "1,9,30,44,24".

        Individual coefficients may be rationals written "p/q".
        """
        parts = [p.strip() for p in text.split(",")]
        return cls([Fraction(p) for p in parts if p])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def is_integer(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly('{self.to_text()}')"

    def to_text(self) -> str:
        from .verdict import format_rational

        if not self.coeffs:
            return "0"
        return ",".join(format_rational(c) for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly([other]) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        """Exact division with remainder over the rationals."""
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [0] * (dq + 1)
        dlc = Fraction(other.lc)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c == 0:
                continue
            q = Fraction(c) / dlc
            quo[i] = q
            for j, oc in enumerate(other.coeffs):
                rem[i + j] -= q * oc
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        """Exact Horner evaluation at a rational point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.evaluate(x)

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    def valuation(self) -> int:
        """Multiplicity of the root x = 0 (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    # -- normal forms ------------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = Fraction(self.lc)
        return Poly([Fraction(c) / lc for c in self.coeffs])

    def primitive(self) -> "Poly":
        """Rescale by a positive rational to coprime integer coefficients.

        The scaling factor is strictly positive, so signs (and in particular
        Sturm sign variations) are preserved.
        """
        if self.is_zero:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return Poly([c // g for c in ints])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (zero polynomial if both are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), normalized to primitive integer form."""
    if p.is_zero:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    q, r = divmod(p, g)
    assert r.is_zero
    return q.primitive()


class RatFunc:
    """Ratio of two polynomials, stored gcd-reduced with a monic denominator.

    The canonical form makes equality a plain field comparison, which is what
    the identity checks in the verifier rely on.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly([1])):
        num = num if isinstance(num, Poly) else Poly([num])
        den = den if isinstance(den, Poly) else Poly([den])
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly(), Poly([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lc = Fraction(den.lc)
            num = num * (1 / lc)
            den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly([1]))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self == RatFunc(other if isinstance(other, Poly) else Poly([other]))
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def evaluate(self, x) -> Fraction:
        dv = self.den.evaluate(x)
        if dv == 0:
            raise ZeroDivisionError(f"evaluation at a pole: {x}")
        return Fraction(self.num.evaluate(x), 1) / dv

    def __call__(self, x):
        return self.evaluate(x)


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc(Poly([value]))
    return NotImplemented


def lambda_d_dlambda(f: RatFunc) -> RatFunc:
    """The operator f |-> x * f'(x): expectation from free energy, variance
    from expectation."""
    return RatFunc(Poly.x()) * f.derivative()
