"""Tour of the exact engine: partition functions, marginals, and the two
moment fractions.

Every quantity here is an exact rational object; nothing is floated.
"""

from fractions import Fraction

from hardcore_lab import (
    brute_force_polynomial,
    generate,
    independence_polynomial,
    marginal,
    occupancy_fraction,
    pair_marginal,
    profile,
    variance_fraction,
    variance_via_marginals,
)

# The partition function of the hard-core model counts independent sets by
# size: Z_G(x) = sum over independent sets I of x^|I|.
for spec in ("kn:5", "kab:1,2", "path:4", "cycle:5", "pasch", "petersen"):
    g = generate(spec)
    z = independence_polynomial(g)
    print(f"{spec:10s} n={g.n:2d}  Z = {z.to_text()}")

# The memoized recursion is checked against a subset-enumeration oracle.
g = generate("petersen")
assert independence_polynomial(g) == brute_force_polynomial(g)
print("\nrecursion matches the brute-force oracle on the Petersen graph")

# Occupancy fraction E = x Z'/(n Z): the expected fraction of occupied
# vertices.  Variance fraction V = x dE/dx.
g = generate("kab:3,3")
e = occupancy_fraction(g)
v = variance_fraction(g)
print(f"\nK_3,3:  E = ({e.num.to_text()}) / ({e.den.to_text()})")
print(f"        V = ({v.num.to_text()}) / ({v.den.to_text()})")
print(f"        E(1) = {e.evaluate(1)},  V(1) = {v.evaluate(1)}")

# Vertex and pair marginals are rational functions too.  On an edge the pair
# marginal vanishes identically.
g = generate("path:3")
p0 = marginal(g, 0)
p02 = pair_marginal(g, 0, 2)
print(f"\npath:3  p_0  = ({p0.num.to_text()}) / ({p0.den.to_text()})")
print(f"        p_02 = ({p02.num.to_text()}) / ({p02.den.to_text()})")
assert pair_marginal(g, 0, 1).is_zero

# The variance admits a second computation path through the marginals:
#   V = (1/n) sum_u (p_u + sum_{v != u} p_uv - p_u sum_v p_v)
# and the engine asserts the two paths agree as reduced rational functions.
g = generate("cycle:6")
assert variance_via_marginals(g) == variance_fraction(g)
print("\npair-marginal variance path agrees with the derivative path on cycle:6")

# A profile bundles everything; pair marginals are filled lazily on demand.
prof = profile(generate("path:5"))
lam = Fraction(1, 3)
print(f"\npath:5 at fugacity {lam}:")
print(f"  Z({lam}) = {prof.z.evaluate(lam)}")
print(f"  E({lam}) = {prof.expectation.evaluate(lam)}")
print(f"  V({lam}) = {prof.variance.evaluate(lam)}")
print(f"  p_02({lam}) = {prof.pair_marginal(0, 2).evaluate(lam)}")
