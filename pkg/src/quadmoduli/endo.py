"""Degree-2 self-maps of the projective line.

A map is a pair of binary quadratic forms

    [u:v] |-> [a0*u^2 + a1*u*v + a2*v^2 : a3*u^2 + a4*u*v + a5*v^2]

with nonvanishing homogeneous resultant, stored as the canonical
primitive integer 6-tuple (scaling is immaterial).  The module also
provides Mobius transformations, conjugation, exact orbits with cycle
detection, and the conversion from six distinct points to the unique
quadratic map cycling through them (when it exists).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateMapError, ExactArithmeticError
from .exactmath import ProjPoint, parse_rational, proj_points_distinct


def resultant(coeffs) -> Fraction:
    """Homogeneous resultant of the two quadratic forms.

    Degree-4 polynomial in the six coefficients; nonzero exactly when
    the forms share no root, i.e. the map has honest degree 2.
    """
    a0, a1, a2, a3, a4, a5 = (Fraction(c) for c in coeffs)
    return (
        a2**2 * a3**2
        + a0**2 * a5**2
        - 2 * a3 * a2 * a0 * a5
        - a1 * a2 * a3 * a4
        - a4 * a1 * a0 * a5
        + a0 * a4**2 * a2
        + a1**2 * a3 * a5
    )


class Mobius:
    """Invertible projective-linear self-map of P^1.

    Held as a primitive integer 2x2 matrix with the first nonzero entry
    positive, so equal transformations compare equal.
    """

    __slots__ = ("matrix",)

    matrix: tuple[int, int, int, int]

    def __init__(self, entries) -> None:
        vals = [v if isinstance(v, (int, Fraction)) else parse_rational(v) for v in entries]
        if len(vals) != 4:
            raise ExactArithmeticError("Mobius needs 4 matrix entries")
        den_lcm = math.lcm(*(Fraction(v).denominator for v in vals))
        ints = [int(v * den_lcm) for v in vals]
        a, b, c, d = ints
        if a * d - b * c == 0:
            raise DegenerateMapError("Mobius matrix is singular")
        g = math.gcd(*ints)
        ints = [e // g for e in ints]
        lead = next(e for e in ints if e != 0)
        if lead < 0:
            ints = [-e for e in ints]
        object.__setattr__(self, "matrix", tuple(ints))

    @classmethod
    def identity(cls) -> "Mobius":
        return cls((1, 0, 0, 1))

    @classmethod
    def from_three_points(cls, p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> "Mobius":
        """The unique Mobius sending (p1, p2, p3) to ([0:1], [1:0], [1:1])."""
        if not proj_points_distinct((p1, p2, p3)):
            raise ExactArithmeticError("the three points must be distinct")
        u1, v1 = p1.coords
        u2, v2 = p2.coords
        u3, v3 = p3.coords
        s = u3 * v2 - v3 * u2  # second linear form at p3
        t = u3 * v1 - v3 * u1  # first linear form at p3
        return cls((v1 * s, -u1 * s, v2 * t, -u2 * t))

    @property
    def det(self) -> int:
        a, b, c, d = self.matrix
        return a * d - b * c

    def __call__(self, p: ProjPoint) -> ProjPoint:
        a, b, c, d = self.matrix
        u, v = p.coords
        return ProjPoint((a * u + b * v, c * u + d * v))

    def inverse(self) -> "Mobius":
        a, b, c, d = self.matrix
        return Mobius((d, -b, -c, a))

    def __matmul__(self, other: "Mobius") -> "Mobius":
        a, b, c, d = self.matrix
        e, f, g, h = other.matrix
        return Mobius((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def __setattr__(self, name, value):
        raise AttributeError("Mobius is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Mobius) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        a, b, c, d = self.matrix
        return f"Mobius([{a} {b}; {c} {d}])"


def _substitute_form(form, p, q, r, s):
    """Coefficients of F(p*u + q*v, r*u + s*v) for a quadratic form F."""
    alpha, beta, gamma = form
    return (
        alpha * p * p + beta * p * r + gamma * r * r,
        2 * alpha * p * q + beta * (p * s + q * r) + 2 * gamma * r * s,
        alpha * q * q + beta * q * s + gamma * s * s,
    )


class QuadMap:
    """A nondegenerate quadratic endomorphism of P^1."""

    __slots__ = ("coeffs",)

    coeffs: ProjPoint

    def __init__(self, coefficients) -> None:
        point = coefficients if isinstance(coefficients, ProjPoint) else ProjPoint(coefficients)
        if point.n != 5:
            raise ExactArithmeticError("QuadMap needs 6 coefficients")
        if resultant(point.coords) == 0:
            raise DegenerateMapError("resultant is zero: not a degree-2 map")
        object.__setattr__(self, "coeffs", point)

    @property
    def forms(self):
        c = self.coeffs.coords
        return (c[0], c[1], c[2]), (c[3], c[4], c[5])

    def resultant(self) -> int:
        return int(resultant(self.coeffs.coords))

    def __call__(self, p: ProjPoint) -> ProjPoint:
        (a0, a1, a2), (a3, a4, a5) = self.forms
        u, v = p.coords
        return ProjPoint((a0 * u * u + a1 * u * v + a2 * v * v, a3 * u * u + a4 * u * v + a5 * v * v))

    def iterate(self, p: ProjPoint, times: int) -> ProjPoint:
        for _ in range(times):
            p = self(p)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("QuadMap is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadMap) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QuadMap({list(self.coeffs.coords)})"

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs.coords]}

    @classmethod
    def from_json(cls, data) -> "QuadMap":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([int(c) for c in data["coeffs"]])


def conjugate(f: QuadMap, g: Mobius) -> QuadMap:
    """The map g o f o g^{-1}; commutes with evaluation through g."""
    a, b, c, d = g.matrix
    # g^{-1} up to scaling is the adjugate.
    p, q, r, s = d, -b, -c, a
    num, den = f.forms
    num_sub = _substitute_form(num, p, q, r, s)
    den_sub = _substitute_form(den, p, q, r, s)
    new_num = tuple(a * n + b * m for n, m in zip(num_sub, den_sub))
    new_den = tuple(c * n + d * m for n, m in zip(num_sub, den_sub))
    return QuadMap(new_num + new_den)


@dataclass(frozen=True)
class OrbitResult:
    """Exact forward orbit with first-repetition cycle detection.

    ``points`` lists the distinct iterates seen, starting at the seed.
    When a repetition occurred, ``preperiod``/``period`` describe the
    tail; otherwise the orbit is still open after ``max_steps`` images.
    """

    points: tuple[ProjPoint, ...]
    preperiod: int | None
    period: int | None

    @property
    def closed(self) -> bool:
        return self.period is not None

    def to_json(self) -> dict:
        return {
            "points": [str(p) for p in self.points],
            "closed": self.closed,
            "preperiod": self.preperiod,
            "period": self.period,
        }


def orbit(f: QuadMap, start: ProjPoint, max_steps: int) -> OrbitResult:
    """Iterate ``f`` from ``start`` for at most ``max_steps`` images."""
    if max_steps < 1:
        raise ExactArithmeticError("max_steps must be >= 1")
    seen: dict[tuple[int, ...], int] = {}
    points: list[ProjPoint] = []
    current = start
    for step in range(max_steps + 1):
        if current.coords in seen:
            first = seen[current.coords]
            return OrbitResult(tuple(points), first, step - first)
        seen[current.coords] = step
        points.append(current)
        current = f(current)
    return OrbitResult(tuple(points), None, None)


@dataclass(frozen=True)
class MarkedCycle:
    """A quadratic map together with an ordered cycle of distinct points.

    Construction verifies that the map sends each point to the next
    (cyclically) and that the points are pairwise distinct, which for a
    cycle forces the period to be exactly ``len(points)``.
    """

    map: QuadMap
    points: tuple[ProjPoint, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 1:
            raise ExactArithmeticError("cycle needs at least one point")
        if not proj_points_distinct(pts):
            raise DegenerateMapError("cycle points are not pairwise distinct")
        n = len(pts)
        for i, p in enumerate(pts):
            if self.map(p) != pts[(i + 1) % n]:
                raise DegenerateMapError(f"map does not send point {i} to point {(i + 1) % n}")

    @property
    def length(self) -> int:
        return len(self.points)

    def shifted(self, amount: int = 1) -> "MarkedCycle":
        amount %= self.length
        return MarkedCycle(self.map, self.points[amount:] + self.points[:amount])

    def to_json(self) -> dict:
        return {"map": self.map.to_json(), "cycle": [str(p) for p in self.points]}

    @classmethod
    def from_json(cls, data) -> "MarkedCycle":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(QuadMap.from_json(data["map"]), tuple(ProjPoint.parse(t) for t in data["cycle"]))


def cycle_to_endomorphism(points) -> MarkedCycle:
    """The unique quadratic map realizing a given 6-cycle, if any.

    Moves the first three points to [0:1], [1:0], [1:1], reads off the
    normalized coordinates of the remaining three, applies the closed
    coefficient formula of the moduli chart and conjugates back.  Raises
    DegenerateMapError when no degree-2 map cycles through the points.
    """
    pts = tuple(points)
    if len(pts) != 6:
        raise ExactArithmeticError("need exactly 6 points")
    if not proj_points_distinct(pts):
        raise DegenerateMapError("the 6 points must be pairwise distinct")
    from .moduli import map_from_coords

    g = Mobius.from_three_points(pts[0], pts[1], pts[2])
    coords = tuple(g(p).affine() for p in pts[3:])
    normalized = map_from_coords(coords)
    if normalized(ProjPoint((coords[1], 1))) != ProjPoint((coords[2], 1)):
        raise DegenerateMapError("no quadratic map realizes this cycle")
    back = conjugate(normalized, g.inverse())
    return MarkedCycle(back, pts)
