"""
Cables and the cable space
==========================

Under (p, q)-cabling, Jones slopes of the companion scale by q^2 and the
cabling annulus contributes the slope pq.  The boundary-slope side comes
from surfaces in the cable space whose outer boundary has slope a/b and
whose inner boundary then has slope a q^2 / b.
"""

from graphslope import cable_boundary_slopes, parse, verify_conjecture
from graphslope.homology import CableSpace

rep = verify_conjecture(parse("C(13,2; T(2,3))"))
print("js  upper:", rep.profile.js_upper)
print("js* upper:", rep.profile.js_star_upper)
print("bs generated:", rep.profile.bs_gen)
for check in rep.hypothesis_trail:
    print(check.route, "->", check.detail)

# The surface of class (aq - bp)[D] + b[A] for a/b = 6, (p, q) = (13, 2).
space = CableSpace(13, 2)
cls = space.surface_class(6, 1)
outer, inner = space.boundary(cls)
print(cls, outer, inner)
print(cable_boundary_slopes(6, 1, 13, 2))

# Iterated cables of sums stay within the generated boundary slopes.
rep = verify_conjecture(parse("C(-3,2; C(13,2; T(2,3)) # mirror(T(3,4)))"))
for row in rep.membership_table:
    print(f"{row.source:4} {str(row.slope):>6} in bs: {row.matched_bs is not None}")
print(rep.verdict.value)
