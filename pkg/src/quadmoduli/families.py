"""Infinite families of quadratic maps with rational 6-cycles.

Three sources of rational points of the moduli surface:

* the three elliptic slice curves (the surface cut by X=0, Y=0 or Z=0),
  each isomorphic to the rank-1 curve y^2 = x^3 + 4x^2 + 3x + 1, whose
  multiples of (0, 1) give infinitely many marked cycles;
* the genus-0 family covering the plane cubic, whose members carry a
  rational fixed point on top of the rational 6-cycle;
* the hyperplane-section curve y^2*z = 4x^3 + z^3, which has exactly
  three rational points and therefore contributes nothing (checked here
  by bounded exhaustive enumeration).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .endo import MarkedCycle, QuadMap, cycle_to_endomorphism
from .errors import DegenerateMapError, ExcludedParameterError, QuadModuliError
from .exactmath import ProjPoint, proj_points_distinct
from .moduli import normalize_marked
from . import surface


@dataclass(frozen=True)
class EllipticCurve:
    """Affine cubic y^2 = c3*x^3 + c2*x^2 + c1*x + c0 with the chord-tangent law."""

    name: str
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def rhs(self, x: Fraction) -> Fraction:
        return self.c3 * x**3 + self.c2 * x**2 + self.c1 * x + self.c0

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return y * y == self.rhs(x)


#: The slice curve: every coordinate slice X=0, Y=0, Z=0 of the surface
#: is birational to it.  Rank 1, generator (0,1), 3-torsion (-1,1).
SLICE_CURVE = EllipticCurve("slice", Fraction(1), Fraction(4), Fraction(3), Fraction(1))

#: The hyperplane-section curve y^2 = 4x^3 + 1 (affine chart z=1 of
#: y^2*z = 4x^3 + z^3); only three rational points exist on it.
HYPERPLANE_CURVE = EllipticCurve("hyperplane", Fraction(4), Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class ECPoint:
    """Exact point of an EllipticCurve; x = y = None encodes infinity."""

    curve: EllipticCurve
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise QuadModuliError("both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))
            if not self.curve.contains(self.x, self.y):
                raise QuadModuliError(f"({self.x}, {self.y}) is not on curve {self.curve.name}")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "infinity" if self.is_infinity else f"({self.x}, {self.y})"


def ec_neg(p: ECPoint) -> ECPoint:
    if p.is_infinity:
        return p
    return ECPoint(p.curve, p.x, -p.y)


def ec_add(p: ECPoint, q: ECPoint) -> ECPoint:
    """Chord-tangent addition; infinity is the identity."""
    if p.curve != q.curve:
        raise QuadModuliError("points on different curves")
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    curve = p.curve
    if p.x == q.x:
        if p.y == -q.y:
            return ECPoint(curve)
        slope = (3 * curve.c3 * p.x**2 + 2 * curve.c2 * p.x + curve.c1) / (2 * p.y)
    else:
        slope = (q.y - p.y) / (q.x - p.x)
    x3 = (slope * slope - curve.c2) / curve.c3 - p.x - q.x
    y3 = -(p.y + slope * (x3 - p.x))
    return ECPoint(curve, x3, y3)


def ec_multiple(n: int, p: ECPoint) -> ECPoint:
    """n-th multiple by repeated addition (n may be negative or zero)."""
    if n < 0:
        return ec_multiple(-n, ec_neg(p))
    acc = ECPoint(p.curve)
    for _ in range(n):
        acc = ec_add(acc, p)
    return acc


#: Infinite-order generator and 3-torsion generator of the slice curve.
SLICE_GENERATOR = ECPoint(SLICE_CURVE, Fraction(0), Fraction(1))
SLICE_TORSION = ECPoint(SLICE_CURVE, Fraction(-1), Fraction(1))

_SLICES = ("Z0", "Y0", "X0")


def _rotate_xyz(p: ProjPoint, times: int) -> ProjPoint:
    """Coordinate 3-cycle [W:X:Y:Z] -> [W:Y:Z:X], iterated."""
    w, x, y, z = p.coords
    for _ in range(times % 3):
        x, y, z = y, z, x
    return ProjPoint((w, x, y, z))


@dataclass(frozen=True)
class FamilyCycle:
    """A family member: the marked cycle, its surface point, provenance."""

    cycle: MarkedCycle
    surface_point: ProjPoint
    provenance: dict
    fixed_point: ProjPoint | None = None

    def to_json(self) -> dict:
        data = self.cycle.to_json()
        data["surface_point"] = str(self.surface_point)
        data["provenance"] = self.provenance
        if self.fixed_point is not None:
            data["fixed_point"] = str(self.fixed_point)
        return data


def elliptic_family_map(n: int, slice: str = "Z0", torsion: int = 0) -> FamilyCycle:
    """Marked 6-cycle from the n-th multiple on a coordinate slice curve.

    Computes n*(0,1) + torsion*(-1,1), maps (x, y) to the surface point
    [1/y : 1/x : 1 : 0], rotates it onto the requested slice and reads
    off the marked cycle.  Parameters whose point leaves the chart or
    lands on the boundary are rejected with the reason.
    """
    if n == 0 and torsion % 3 == 0:
        raise ExcludedParameterError("parameter excluded: the zero multiple is the identity")
    if slice not in _SLICES:
        raise QuadModuliError(f"slice must be one of {_SLICES}")
    point = ec_add(ec_multiple(n, SLICE_GENERATOR), ec_multiple(torsion, SLICE_TORSION))
    provenance = {"family": f"elliptic-slice-{slice}", "parameter": n, "torsion": torsion}
    if point.is_infinity:
        raise ExcludedParameterError("parameter excluded: point at infinity")
    if point.x == 0 or point.y == 0:
        raise ExcludedParameterError("parameter excluded: slice coordinate vanishes")
    base = ProjPoint((1 / point.y, 1 / point.x, Fraction(1), Fraction(0)))
    surface_point = _rotate_xyz(base, _SLICES.index(slice))
    result = surface.membership(surface_point)
    if not result.inside:
        raise ExcludedParameterError(
            "parameter excluded: boundary point on " + ", ".join(result.components)
        )
    cycle = surface.point_to_cycle(surface_point)
    return FamilyCycle(cycle, surface_point, provenance)


def genus0_cycle_points(p: Fraction):
    """The seven displayed points (fixed point first, then the 6-cycle).

    Raises ExcludedParameterError when a projective pair degenerates to
    (0, 0); coincidences between points are checked by the caller.
    """
    p = Fraction(p)
    raw = [
        (Fraction(1), p + 1),  # fixed point
        (Fraction(1), Fraction(0)),
        (p**3 + 5 * p**2 + 2 * p + 1, (2 * p + 1) * (p**3 + p**2 + 1)),
        (Fraction(0), Fraction(1)),
        ((p + 2) * (p**3 - p**2 - 2 * p - 1), 2 * (p - 1) * (p + 1) ** 2 * (2 * p + 1)),
        (Fraction(1), Fraction(1)),
        (2 * (p + 2) * (2 * p + 1), (p + 1) * (p**3 + p**2 + 4 * p + 3)),
    ]
    for i, pair in enumerate(raw):
        if pair == (0, 0):
            raise ExcludedParameterError(f"parameter excluded: point {i} degenerates at p={p}")
    return [ProjPoint(pair) for pair in raw]


def genus0_lambdas(p: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Root data of the family map: numerator roots l1, l2 (preimages of
    the cycle point at 0), denominator roots l3, l4 (preimages of the
    cycle point at infinity)."""
    p = Fraction(p)
    a = (2 * p + 1) * (p**3 + p**2 + 1)
    b = p**3 + 5 * p**2 + 2 * p + 1
    l1 = b / a
    l2 = (p + 2) ** 2 * (p**3 - p**2 - 2 * p - 1) ** 2 / (
        b * (p**3 + p**2 + 4 * p + 3) * (p + 1) ** 2
    )
    l3 = 2 * (p + 2) * (2 * p + 1) / ((p + 1) * (p**3 + p**2 + 4 * p + 3))
    l4 = (p**2 - 1) * b * (p**3 - p**2 - 2 * p - 1) / ((2 * p + 1) ** 2 * (p**3 + p**2 + 1) ** 2)
    return l1, l2, l3, l4


def genus0_family(p) -> FamilyCycle:
    """Marked 6-cycle with an extra rational fixed point, parameter p.

    The six cycle points and the fixed point [1:p+1] come from closed
    formulas; the map is built through cycle_to_endomorphism and checked
    to fix the fixed point.  Excluded parameters (coincident points,
    degenerate coordinates, resultant zero) raise with the reason; the
    excluded set is decided dynamically, not hardcoded.
    """
    p = Fraction(p)
    points = genus0_cycle_points(p)
    fixed, cycle_points = points[0], points[1:]
    if not proj_points_distinct(points):
        raise ExcludedParameterError(f"parameter excluded: coincident points at p={p}")
    try:
        mc = cycle_to_endomorphism(cycle_points)
    except DegenerateMapError as exc:
        raise ExcludedParameterError(f"parameter excluded: {exc}") from exc
    if mc.map(fixed) != fixed:
        raise QuadModuliError(f"fixed-point check failed at p={p}")
    l1, l2, l3, l4 = genus0_lambdas(p)
    if l1 != points[2].affine() or l3 != points[6].affine():
        raise QuadModuliError(f"root data cross-check failed at p={p}")
    model, _ = normalize_marked(mc)
    surface_point = surface.model_to_surface(model)
    provenance = {"family": "genus0-p", "parameter": str(p)}
    return FamilyCycle(mc, surface_point, provenance, fixed_point=fixed)


def genus0_prefactor_report(p) -> dict:
    """Which printed denominator prefactor makes the root-data map match.

    The family map in root form is [A(u-l1*v)(u-l2*v) : q(u-l3*v)(u-l4*v)]
    with A = (2p+1)(p^3+p^2+1).  Tests q = p^5+5p^2+2p+1 and
    q = p^3+5p^2+2p+1 against the cycle-built map, plus the derived
    consistent choice q = A^2/B with B = p^3+5p^2+2p+1.
    """
    p = Fraction(p)
    family = genus0_family(p)
    f = family.cycle.map
    l1, l2, l3, l4 = genus0_lambdas(p)
    a = (2 * p + 1) * (p**3 + p**2 + 1)
    b = p**3 + 5 * p**2 + 2 * p + 1
    candidates = {
        "printed-p5": p**5 + 5 * p**2 + 2 * p + 1,
        "printed-p3": b,
        "derived-A2-over-B": a * a / b,
    }
    report = {"parameter": str(p)}
    for name, q in candidates.items():
        coeffs = (a, -a * (l1 + l2), a * l1 * l2, q, -q * (l3 + l4), q * l3 * l4)
        try:
            report[name] = f == QuadMap(coeffs)
        except DegenerateMapError:
            report[name] = False
    return report


def cubic_curve_param(m) -> ProjPoint:
    """Rational parametrization of the plane cubic covered by the genus-0
    family: m -> [-m^3+2m^2-3m+1 : m^3-m+1 : m^3-2m^2+m-1]."""
    m = Fraction(m)
    return ProjPoint(
        (
            -(m**3) + 2 * m**2 - 3 * m + 1,
            m**3 - m + 1,
            m**3 - 2 * m**2 + m - 1,
        )
    )


def fermat_curve_points(height: int) -> list[ProjPoint]:
    """All rational points of y^2*z = 4x^3 + z^3 up to the given height.

    Exhaustive over canonical integer representatives with coordinates
    bounded by ``height`` in absolute value.  (Only three points exist
    at any height; the enumeration is the verification.)
    """
    if height < 1:
        raise QuadModuliError("height must be >= 1")
    found: set[ProjPoint] = set()
    found.add(ProjPoint((0, 1, 0)))  # z = 0 forces x = 0
    for z in range(-height, height + 1):
        if z == 0:
            continue
        for x in range(-height, height + 1):
            num = 4 * x**3 + z**3
            quot, rem = divmod(num, z)
            if rem != 0 or quot < 0:
                continue
            y = math.isqrt(quot)
            if y * y != quot or y > height:
                continue
            for yy in {y, -y}:
                if math.gcd(x, yy, z) == 1:
                    found.add(ProjPoint((x, yy, z)))
    return sorted(found, key=lambda q: (q.height, q.coords))
