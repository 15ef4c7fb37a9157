"""Desk-scale numerics for elliptic curves y^2 = x^3 - A x - B over Q.

Point counting over finite fields, local zeta functions, truncated
Hasse-Weil L-series with Taylor/rank estimation at s = 1, and bounded
searches for torsion and non-torsion rational points.
"""

from .curve import (
    INFINITY,
    BadPrime,
    CurveFp,
    CurveQ,
    RationalPoint,
    discriminant,
    parse_curve,
    point_add,
    point_mul,
    reduce_mod_p,
    scale_curve,
)
from .errors import (
    AmbiguousOrder,
    BsdkitError,
    BudgetExceeded,
    InvariantViolation,
    NotOnCurve,
    PoleError,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "AmbiguousOrder",
    "BadPrime",
    "BsdkitError",
    "BudgetExceeded",
    "CurveFp",
    "CurveQ",
    "InvariantViolation",
    "NotOnCurve",
    "PoleError",
    "RationalPoint",
    "discriminant",
    "parse_curve",
    "point_add",
    "point_mul",
    "reduce_mod_p",
    "scale_curve",
]
