"""
Colored Jones degrees of torus knots
====================================

The maximal and minimal degrees of the colored Jones polynomials of a
torus knot are quadratic quasi-polynomials in the color.  Here we compute
the polynomials exactly, read off their degrees, and recover the
quasi-polynomials from the samples.
"""

from graphslope import colored_jones_torus, fit_from_samples, torus_delta

# The ordinary Jones polynomial is color 2.  For the right-handed trefoil
# it is q + q^3 - q^4.
print("J(T(2,3), 2) =", colored_jones_torus(2, 3, 2))
print("J(T(3,5), 2) =", colored_jones_torus(3, 5, 2))

# Degrees for the first few colors of T(3,5).
for n in range(1, 9):
    J = colored_jones_torus(3, 5, n)
    print(f"n={n}: max degree {J.max_deg():4d}, min degree {J.min_deg():3d}")

# Fitting period-2 quasi-polynomials to those samples reproduces the
# closed-form degree formulas exactly, including the correction that only
# appears for even colors.
samples = [(n, colored_jones_torus(3, 5, n)) for n in range(1, 9)]
top = fit_from_samples([(n, J.max_deg()) for n, J in samples], period=2)
bottom = fit_from_samples([(n, J.min_deg()) for n, J in samples], period=2)
print("fitted max degree:", top)
print("fitted min degree:", bottom)
print("matches closed form:", (top, bottom) == torus_delta(3, 5))

# The Jones slopes are the cluster points of 4 * degree / n^2; they are four
# times the values of the quadratic coefficient.
for n in (10, 100, 1000):
    print(f"4*delta({n})/n^2 = {float(4 * top(n) / n**2):.5f}")
print("limit: 4 * c2 =", 4 * top.c2[0])
