"""The fifteen invariant polynomials of degree below 8.

Each named invariant is built twice: geometrically, by summing flat
equations, and in closed form from the cube-group orbit sums.  Degrees are
confirmed a third way by exhaustive flat-incidence scans that never touch
the coefficient algebra.
"""

from segre_pg72 import (
    Anf,
    definitional_orbits,
    degree_by_incidence,
    element,
    invariant_subspace,
    named_P_basis,
    named_Q,
    orbit_mask,
    verify_seven_table,
)

p = named_P_basis()
print("Orbit-sum polynomials:")
for name, poly in p.items():
    print(f"  {name:>6}: degree {poly.degree}, {poly.coeffs.bit_count()} terms")

q = named_Q()
print("\nNamed invariants (each equal to its geometric construction):")
for name, poly in q.items():
    print(f"  {name:>4}: degree {poly.degree}, {poly.coeffs.bit_count()} terms")
print("  Q2 =", " + ".join(q["Q2"].monomial_strings()))

print("\nIncidence-only degree confirmations:")
orbs = definitional_orbits()
for name, labels in (("Q2", ("O2", "O4", "O5")), ("Q4", ("O2", "O5")),
                     ("Q4'", ("O3", "O4", "O5")), ("Q6", ("O5",))):
    print(f"  {name:>4}: {degree_by_incidence(orbit_mask(orbs, *labels))}")

print("\nValue table of the seven low-degree invariants:")
for cid, desc, expected, actual, ok in verify_seven_table():
    print(f"  {'ok ' if ok else 'BAD'} {desc}: {actual}")

basis = invariant_subspace((element("M"), element("N")), 7)
members = {0}
for b in basis:
    members |= {x ^ b.coeffs for x in members}
members.discard(0)
print("\nInvariants of degree < 8:", len(members))
census = {}
for c in members:
    d = Anf(c).degree
    census[d] = census.get(d, 0) + 1
print("Degree census:", census)

print("\nThe product identity expressing the sextic:")
print("  Q2*Q4' + Q4 + Q4' == Q6:", q["Q2"] * q["Q4'"] + q["Q4"] + q["Q4'"] == q["Q6"])
