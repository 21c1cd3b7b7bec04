"""Certified enclosures with exact rational endpoints.

Transcendental values (logs, Lambert W, entropy) are never floated: each is
bracketed by rationals with an explicit truncation-error bound, so a
comparison either certifies, refutes, or honestly reports inconclusive.
"""

from fractions import Fraction

from hardcore_lab import (
    bounds,
    entropy_interval,
    free_energy_interval,
    generate,
    independence_polynomial,
    lambert_w_interval,
    log1p_interval,
)

tol = Fraction(1, 10**12)

enc = log1p_interval(1, tol)
print(f"log 2  in [{float(enc.lo):.15f}, {float(enc.hi):.15f}], width <= 1e-12")

enc = lambert_w_interval(1, tol)
print(f"W(1)   in [{float(enc.lo):.15f}, {float(enc.hi):.15f}]")

enc = entropy_interval(Fraction(1, 4), tol)
print(f"h(1/4) in [{float(enc.lo):.15f}, {float(enc.hi):.15f}]")

z = independence_polynomial(generate("kn:4"))
enc = free_energy_interval(z, 4, 1, tol)
print(f"free energy of kn:4 at fugacity 1 in "
      f"[{float(enc.lo):.15f}, {float(enc.hi):.15f}]  (= log(5)/4)")

# The triangle-free occupancy floor weights each degree by a Lambert-W
# factor; certifying it needs the whole enclosure pipeline.
for spec, lam in (("cycle:5", Fraction(1, 100)), ("petersen", Fraction(1, 10**4))):
    check = bounds.check_occupancy_tf(generate(spec), lam)
    print(f"\ntriangle-free floor on {spec} at {lam}: {check.status}, "
          f"certified slack >= {float(check.margin):.3e}")

# The chain linking expectation and free energy, certified on both sides.
g = generate("path:4")
for check in bounds.check_combined_chain(g, 1):
    print(f"{check.name:35s} {check.status}")

# On an edgeless graph the first link is an equality; interval arithmetic
# cannot separate equal sides, and the checker says so rather than guessing.
check = bounds.check_combined_chain(generate("empty:2"), 1, tol=Fraction(1, 10**28))[0]
print(f"\nedgeless equality case: {check.name} -> {check.status} "
      "(refined to the tolerance floor, by design)")
