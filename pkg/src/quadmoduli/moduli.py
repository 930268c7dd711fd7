"""Affine models of the moduli of marked n-cycles, 3 <= n <= 6.

Up to Mobius conjugation a marked cycle can be put in the normal form

    (f, [0:1], [1:0], [1:1], [x1:1], ..., [x_{n-3}:1]).

For n >= 5 the tuple (x1, ..., x_{n-3}) determines f through a closed
coefficient formula, so the model point is just those coordinates.  The
smaller cases keep a projective part: for n = 3 the chart is the
coefficient plane [a1:a3:a4], for n = 4 the pair ([a1:a2], x) where the
fourth marked point is [1:x].  The cycle-shift automorphism acts on each
chart by an explicit birational formula, validated in the tests against
its definition (shift the cycle, renormalize).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .endo import MarkedCycle, Mobius, QuadMap, conjugate, resultant
from .errors import BoundaryError, DegenerateMapError, ExactArithmeticError
from .exactmath import ProjPoint, parse_rational


@dataclass(frozen=True)
class ModelPoint:
    """A point of the affine model for marked n-cycles."""

    n: int
    coords: tuple[Fraction, ...] = ()
    proj: ProjPoint | None = None

    def __post_init__(self):
        if not 3 <= self.n <= 6:
            raise ExactArithmeticError("model defined for 3 <= n <= 6")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        expected = {3: 0, 4: 1, 5: 2, 6: 3}[self.n]
        if len(self.coords) != expected:
            raise ExactArithmeticError(f"n={self.n} model needs {expected} coordinates")
        if self.n in (3, 4) and self.proj is None:
            raise ExactArithmeticError(f"n={self.n} model needs a projective part")

    def to_json(self) -> dict:
        data = {"n": self.n, "coords": [str(c) for c in self.coords]}
        if self.proj is not None:
            data["proj"] = str(self.proj)
        return data

    @classmethod
    def from_json(cls, data) -> "ModelPoint":
        proj = ProjPoint.parse(data["proj"]) if "proj" in data else None
        return cls(int(data["n"]), tuple(parse_rational(c) for c in data["coords"]), proj)


@dataclass(frozen=True)
class MembershipResult:
    inside: bool
    reason: str | None = None

    def to_json(self) -> dict:
        return {"inside": self.inside, "reason": self.reason}


def map_from_coords(coords) -> QuadMap:
    """Quadratic map in normal form from model coordinates (n >= 5).

    Implements the closed formula inverting the projection of the
    moduli surface to coordinate space: the output satisfies

        f([0:1]) = [1:0],  f([1:0]) = [1:1],  f([1:1]) = [x1:1],
        f([x1:1]) = [x2:1],  f([x_k:1]) = [0:1].

    For n = 6 the remaining condition f([x2:1]) = [x3:1] is NOT imposed
    here; it is the surface equation and is checked by membership() and
    by cycle constructors.  Raises DegenerateMapError when the formula
    produces a resultant-zero coefficient vector.
    """
    xs = tuple(Fraction(c) for c in coords)
    if len(xs) not in (2, 3):
        raise ExactArithmeticError("model coordinates must have length 2 (n=5) or 3 (n=6)")
    if len(set(xs)) != len(xs) or any(x in (0, 1) for x in xs):
        raise DegenerateMapError("coordinates must be pairwise distinct and avoid 0 and 1")
    x1, x2, xk = xs[0], xs[1], xs[-1]
    a0 = x1 * (x2 * xk + x1 - x2 - xk)
    a1 = x1 * (xk**2 - xk**2 * x2 - x2 * x1 + x2 + x2 * x1**2 - x1**2)
    a2 = x1 * xk * (xk * x2 - x1 * xk + x2 * x1 - x2 - x2 * x1**2 + x1**2)
    a3 = a0
    a4 = (
        -x1 * xk**2
        + xk**2
        + xk * x1**2
        - xk
        + x1 * xk
        + x2 * x1**2
        - x1**2 * xk * x2
        + x1
        - 2 * x1**2
    )
    a5 = Fraction(0)
    if all(a == 0 for a in (a0, a1, a2, a3, a4)):
        raise DegenerateMapError("coefficient formula degenerates to zero")
    return QuadMap((a0, a1, a2, a3, a4, a5))


def _marked_points(n: int, coords, x4_slope: Fraction | None = None):
    pts = [ProjPoint((0, 1)), ProjPoint((1, 0)), ProjPoint((1, 1))]
    if n == 4:
        pts.append(ProjPoint((1, x4_slope)))
    else:
        pts.extend(ProjPoint((x, 1)) for x in coords)
    return tuple(pts)


def model_to_cycle(point: ModelPoint) -> MarkedCycle:
    """Rebuild the normal-form marked cycle from a model point."""
    if point.n == 3:
        a1, a3, a4 = (Fraction(c) for c in point.proj.coords)
        f = QuadMap((a3, a1, -a1 - a3, a3, a4, 0))
        return MarkedCycle(f, _marked_points(3, ()))
    if point.n == 4:
        a1, a2 = (Fraction(c) for c in point.proj.coords)
        x = point.coords[0]
        f = QuadMap(
            (
                -a1 * x - a2 * x**2,
                a1,
                a2,
                -a1 * x - a2 * x**2,
                -a1 * x**2 - a2 * x**3 + 2 * a1 * x + x * a2 + a2 * x**2,
                0,
            )
        )
        return MarkedCycle(f, _marked_points(4, (), x))
    f = map_from_coords(point.coords)
    return MarkedCycle(f, _marked_points(point.n, point.coords))


def normalize_marked(mc: MarkedCycle) -> tuple[ModelPoint, Mobius]:
    """Unique normal form of a marked cycle.

    Returns the model point together with the Mobius transformation g
    sending (p1, p2, p3) to ([0:1], [1:0], [1:1]); conjugating the map
    by g and applying g to the points recovers the normal-form cycle.
    """
    n = mc.length
    if not 3 <= n <= 6:
        raise ExactArithmeticError("normal form defined for cycles of length 3 to 6")
    g = Mobius.from_three_points(mc.points[0], mc.points[1], mc.points[2])
    if n in (5, 6):
        coords = tuple(g(p).affine() for p in mc.points[3:])
        return ModelPoint(n, coords), g
    conj = conjugate(mc.map, g)
    c = conj.coeffs.coords
    if n == 3:
        return ModelPoint(3, (), ProjPoint((c[1], c[3], c[4]))), g
    image = g(mc.points[3])
    x = Fraction(image.coords[1], image.coords[0])
    return ModelPoint(4, (x,), ProjPoint((c[1], c[2]))), g


def sigma_action(n: int, point: ModelPoint) -> ModelPoint:
    """Cycle-shift automorphism on the affine model, by closed formula.

    Matches shifting the marked cycle by one and renormalizing; applied
    n times it is the identity.  Raises BoundaryError where the
    birational formula is undefined.
    """
    if point.n != n:
        raise ExactArithmeticError("model point has wrong n")
    if n == 3:
        a1, a3, a4 = (Fraction(c) for c in point.proj.coords)
        return ModelPoint(3, (), ProjPoint((-a1 - 2 * a3 - a4, a1 + a3, -a1 - 2 * a3)))
    if n == 4:
        a1, a2 = (Fraction(c) for c in point.proj.coords)
        x = point.coords[0]
        if x == 1:
            raise BoundaryError("boundary of birational action: x = 1")
        new_proj = ((a2 - a2 * x**2 - a1 * x - x * a2) * x, (x - 1) * (a1 + x * a2))
        if new_proj[0] == 0 and new_proj[1] == 0:
            raise BoundaryError("boundary of birational action: projective part vanishes")
        return ModelPoint(4, (x / (x - 1),), ProjPoint(new_proj))
    if n == 5:
        x, y = point.coords
        if y == 1:
            raise BoundaryError("boundary of birational action: y = 1")
        return ModelPoint(5, ((x - 1) / (y - 1), 1 - x))
    if n == 6:
        x, y, z = point.coords
        if y == 1 or z == 1:
            raise BoundaryError("boundary of birational action: denominator vanishes")
        return ModelPoint(6, ((x - 1) / (y - 1), (x - 1) / (z - 1), 1 - x))
    raise ExactArithmeticError("sigma action defined for n in {3,4,5,6}")


def membership(n: int, coords) -> MembershipResult:
    """Decide whether model coordinates lie in the marked-cycle locus.

    Checks, in order: pairwise distinctness away from {0,1}, nonzero
    resultant of the closed coefficient formula, and (n = 6) the
    remaining cycle condition f([x2:1]) = [x3:1].  The reason names the
    first failed condition.
    """
    if n not in (5, 6):
        raise ExactArithmeticError("membership implemented for n in {5,6}")
    xs = tuple(Fraction(c) for c in coords)
    if len(xs) != n - 3:
        raise ExactArithmeticError(f"n={n} needs {n - 3} coordinates")
    if len(set(xs)) != len(xs):
        return MembershipResult(False, "coords not distinct")
    if any(x in (0, 1) for x in xs):
        return MembershipResult(False, "coord in {0,1}")
    x1, x2, xk = xs[0], xs[1], xs[-1]
    a0 = x1 * (x2 * xk + x1 - x2 - xk)
    a1 = x1 * (xk**2 - xk**2 * x2 - x2 * x1 + x2 + x2 * x1**2 - x1**2)
    a2 = x1 * xk * (xk * x2 - x1 * xk + x2 * x1 - x2 - x2 * x1**2 + x1**2)
    a4 = (
        -x1 * xk**2
        + xk**2
        + xk * x1**2
        - xk
        + x1 * xk
        + x2 * x1**2
        - x1**2 * xk * x2
        + x1
        - 2 * x1**2
    )
    if resultant((a0, a1, a2, a0, a4, 0)) == 0:
        return MembershipResult(False, "resultant zero")
    if n == 6:
        f = QuadMap((a0, a1, a2, a0, a4, 0))
        if f(ProjPoint((x2, 1))) != ProjPoint((xs[2], 1)):
            return MembershipResult(False, "cycle condition f([x2:1]) = [x3:1] fails")
    return MembershipResult(True)
