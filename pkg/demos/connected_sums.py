"""
Slopes of connected sums
========================

Colored Jones polynomials multiply under connected sum, so degree
quasi-polynomials add and Jones slopes of the sum are sums of Jones
slopes of the summands.  Boundary slopes add as well, via surfaces glued
across the decomposing annulus.
"""

from graphslope import (check_condition_delta, degrees_of_expression, glued_boundary_class,
                        parse, profile)

k = parse("T(2,3) # T(3,5)")
prof = profile(k)
print("js  upper:", prof.js_upper)
print("js* upper:", prof.js_star_upper)
print("bs generated:", prof.bs_gen)

# The engine's degree quasi-polynomial agrees with the product polynomial.
top, bottom = prof.delta
for n in range(1, 6):
    print(n, degrees_of_expression(k, n), (top(n), bottom(n)))

# Condition delta is checked clause by clause on the summed quasi-polynomials.
print(check_condition_delta(top, bottom))

# A square knot mixes handedness: the mirror trefoil contributes its
# negative slope to js*.
print(profile(parse("T(2,3) # mirror(T(2,3))")).jones_slopes)

# Boundary slopes add: gluing two copies of a slope-6 surface (two boundary
# curves each) to slope-15 surfaces gives curves of slope 21.
g = glued_boundary_class(2, 6, 1, 2, 15, 1)
print(g.total, g.component_slope, g.component_count)
