"""Exact models of quadratic self-maps of P^1 with marked periodic cycles."""

__version__ = "0.1.0"

from .exactmath import MultiPoly, ProjPoint, Rational, format_rational, parse_rational
from .endo import MarkedCycle, Mobius, OrbitResult, QuadMap, conjugate, cycle_to_endomorphism, orbit, resultant
from .moduli import MembershipResult, ModelPoint, map_from_coords, membership, model_to_cycle, normalize_marked, sigma_action

__all__ = [
    "MultiPoly",
    "ProjPoint",
    "Rational",
    "format_rational",
    "parse_rational",
    "MarkedCycle",
    "Mobius",
    "OrbitResult",
    "QuadMap",
    "conjugate",
    "cycle_to_endomorphism",
    "orbit",
    "resultant",
    "MembershipResult",
    "ModelPoint",
    "map_from_coords",
    "membership",
    "model_to_cycle",
    "normalize_marked",
    "sigma_action",
]
