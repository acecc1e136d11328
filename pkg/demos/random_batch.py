"""
Checking many graph knots at once
=================================

Random graph-knot expressions, built from torus knots by mirroring,
connected sum and cabling, all have their Jones slope upper sets inside
the generated boundary slopes.  The same run is available from the
command line as ``graphslope batch --seed 2024 --count 200``.
"""

from collections import Counter

from graphslope import profile, render
from graphslope.generate import random_batch

exprs = random_batch(seed=2024, count=200, depth=4, max_p=50, max_q=7)
verdicts = Counter(profile(k).verdict.value for k in exprs)
print(verdicts)

# The largest expression in the batch and its slopes.
k = max(exprs, key=lambda k: len(render(k)))
prof = profile(k)
print(render(k))
print("jones slopes:", prof.jones_slopes)
print("generated boundary slopes:", len(prof.bs_gen))
