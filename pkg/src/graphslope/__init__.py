"""Slope conjecture arithmetic for graph knots.

Graph knots are built from torus knots by connected sum and cabling.
This package computes their Jones slope sets (as upper sets where only
inclusions are known), generates boundary slopes with the sum and cable
rules, tracks Condition delta, and checks the torus-knot degree formulas
against exact colored Jones polynomials.
"""

from .homology import cable_boundary_slopes, glued_boundary_class
from .knots import (U, Cable, KnotExpr, Mirror, Sum, Torus, Unknot, normalize_mirrors,
                    parse, render, validate)
from .laurent import LaurentPoly
from .oracle import colored_jones_torus, cross_validate, degrees_of_expression
from .qpoly import QuasiPoly, fit_from_samples, leading_set, torus_delta
from .rational import SlopeSet
from .slopes import (ConditionStatus, SlopeProfile, Verdict, cable_transform,
                     check_condition_delta, profile, sum_slopes, verify_conjecture)

__all__ = [
    "U", "Cable", "KnotExpr", "Mirror", "Sum", "Torus", "Unknot", "normalize_mirrors",
    "parse", "render", "validate", "LaurentPoly", "colored_jones_torus", "cross_validate",
    "degrees_of_expression", "QuasiPoly", "fit_from_samples", "leading_set", "torus_delta",
    "SlopeSet", "ConditionStatus", "SlopeProfile", "Verdict", "cable_transform",
    "check_condition_delta", "profile", "sum_slopes", "verify_conjecture",
    "cable_boundary_slopes", "glued_boundary_class",
]
