"""The quintic surface model of the marked-6-cycle moduli space.

The moduli space embeds as an open subset of the quintic hypersurface

    W^2 * F3(X,Y,Z) = F5(X,Y,Z)   in P^3,

where F3 is a cubic and F5 a quintic form.  This module holds the
surface equation, the birational maps to and from the affine model, the
order-6 linear action, the boundary catalog (9 lines and 14 conics
making up the complement of the moduli locus), the point-to-map
conversion and the singular-locus report.  The polynomial identity
catalog lives in :mod:`quadmoduli.identities`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .endo import MarkedCycle, QuadMap
from .errors import BoundaryError, ExactArithmeticError
from .exactmath import MultiPoly, ProjPoint, canon_coords
from .moduli import ModelPoint

VARS = ("W", "X", "Y", "Z")
_W, _X, _Y, _Z = MultiPoly.vars(VARS)

#: Cubic form of the surface equation.
CUBIC_FORM = (_X + _Y + _Z) ** 3 + (_X**2 * _Z + _X * _Y**2 + _Y * _Z**2) + 2 * _X * _Y * _Z

#: Quintic form of the surface equation.
QUINTIC_FORM = (_Z**3 * _X**2 + _X**3 * _Y**2 + _Y**3 * _Z**2) - _X * _Y * _Z * (
    _Y * _Z + _X * _Y + _X * _Z
)

#: Defining polynomial of the surface: W^2*F3 - F5.
SURFACE_FORM = _W**2 * CUBIC_FORM - QUINTIC_FORM

#: The rational cubic curve in the [X:Y:Z] plane covered by the
#: fixed-point family: X^3+Y^3+Z^3 = X^2*Y + Y^2*Z + Z^2*X.
PLANE_CUBIC_FORM = (
    _X**3 + _Y**3 + _Z**3 - (_X**2 * _Y + _Y**2 * _Z + _Z**2 * _X)
)


def cubic_form_at(x: int, y: int, z: int) -> int:
    return (x + y + z) ** 3 + (x * x * z + x * y * y + y * z * z) + 2 * x * y * z


def quintic_form_at(x: int, y: int, z: int) -> int:
    return (z**3 * x * x + x**3 * y * y + y**3 * z * z) - x * y * z * (y * z + x * y + x * z)


def surface_defect(p: ProjPoint) -> int:
    """W^2*F3 - F5 at the canonical integer coordinates (0 iff on surface)."""
    w, x, y, z = p.coords
    return w * w * cubic_form_at(x, y, z) - quintic_form_at(x, y, z)


def on_surface(p: ProjPoint) -> bool:
    return surface_defect(p) == 0


def model_to_surface(coords) -> ProjPoint:
    """Birational map from affine model coordinates into the surface."""
    if isinstance(coords, ModelPoint):
        coords = coords.coords
    x, y, z = (Fraction(c) for c in coords)
    image = (
        -y + z - y * z + x * y,
        -y - z + y * z + 2 * x - x * y,
        y - z - y * z + x * y,
        y + z - x * y - y * z,
    )
    if all(c == 0 for c in image):
        raise BoundaryError("model point outside the chart of the surface map")
    return ProjPoint(image)


def surface_to_model(p: ProjPoint) -> tuple[Fraction, Fraction, Fraction]:
    """Inverse birational map onto affine model coordinates (x1, x2, x3)."""
    w, x, y, z = (Fraction(c) for c in p.coords)
    denom = w * w + x * y + y * z + x * z
    if denom == 0 or x + y == 0:
        raise BoundaryError("surface point outside the chart of the inverse map")
    return (
        (x + z) * (w + y) / denom,
        (w + y) / (x + y),
        (w + z) * (w + y) / denom,
    )


def sigma_surface(p: ProjPoint) -> ProjPoint:
    """Order-6 cycle-shift action on the surface: [W:X:Y:Z] -> [-W:Y:Z:X].

    This is the generator matching the affine-model shift through the
    birational map (the identity catalog records the check); its cube is
    the sign flip [-W:X:Y:Z] and its sixth power the identity.
    """
    w, x, y, z = p.coords
    return ProjPoint((-w, y, z, x))


def sigma_orbit(p: ProjPoint) -> tuple[ProjPoint, ...]:
    """The distinct images of p under powers of the order-6 action."""
    out = []
    current = p
    for _ in range(6):
        if current not in out:
            out.append(current)
        current = sigma_surface(current)
    return tuple(out)


def orbit_rep_coords(coords) -> tuple[int, ...]:
    """Tuple-level orbit minimum; fast path for the search."""
    w, x, y, z = coords
    best = None
    for _ in range(6):
        w, x, y, z = -w, y, z, x
        cand = canon_coords((w, x, y, z))
        if best is None or cand < best:
            best = cand
    return best


def orbit_representative(p: ProjPoint) -> ProjPoint:
    """Lexicographically smallest canonical point of the sigma orbit."""
    return ProjPoint(orbit_rep_coords(p.coords))


# ---------------------------------------------------------------------------
# Boundary catalog: 9 lines and 14 conics.
# ---------------------------------------------------------------------------

_PARAM_PAIRS = [
    (1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (2, -1), (1, -2),
    (3, 1), (1, 3), (3, 2), (2, 3), (3, -1), (1, -3), (4, 1), (1, 4),
    (3, -2), (2, -3), (5, 1), (1, 5), (4, 3), (3, 4), (5, 2), (2, 5),
]


@dataclass(frozen=True)
class BoundaryComponent:
    """One irreducible component of the complement of the moduli locus.

    ``equations`` cut the component out of P^3 (two linear forms for a
    line; a linear and a quadratic form for a conic).  ``sample``
    produces exact rational points of the component, all of which lie on
    the surface.
    """

    name: str
    kind: str
    equations: tuple[MultiPoly, ...]
    _basis: tuple[tuple[int, ...], ...]

    @cached_property
    def _int_equations(self):
        # integer term lists for fast containment tests in the search
        return tuple(
            tuple((int(c), e) for e, c in eq.terms.items()) for eq in self.equations
        )

    def contains(self, p: ProjPoint) -> bool:
        w, x, y, z = p.coords
        for terms in self._int_equations:
            total = 0
            for c, (ew, ex, ey, ez) in terms:
                total += c * w**ew * x**ex * y**ey * z**ez
            if total != 0:
                return False
        return True

    def sample(self, count: int = 10) -> list[ProjPoint]:
        if self.kind == "line":
            return self._sample_line(count)
        return self._sample_conic(count)

    def _sample_line(self, count: int) -> list[ProjPoint]:
        p0, p1 = self._basis
        out: list[ProjPoint] = []
        for s, t in _PARAM_PAIRS:
            coords = tuple(s * a + t * b for a, b in zip(p0, p1))
            if all(c == 0 for c in coords):
                continue
            point = ProjPoint(coords)
            if point not in out:
                out.append(point)
            if len(out) >= count:
                break
        return out

    def _sample_conic(self, count: int) -> list[ProjPoint]:
        base, b1, b2 = self._conic_setup()
        quadric = self.equations[1]
        out: list[ProjPoint] = []

        def plane_eval(striple):
            return tuple(
                striple[0] * a + striple[1] * b + striple[2] * c
                for a, b, c in zip(*self._basis)
            )

        def q_at(striple):
            return quadric.eval(dict(zip(VARS, plane_eval(striple))))

        def polar(u, v):
            added = tuple(a + b for a, b in zip(u, v))
            return q_at(added) - q_at(u) - q_at(v)

        for lam, mu in _PARAM_PAIRS:
            direction = tuple(lam * a + mu * b for a, b in zip(b1, b2))
            qv = q_at(direction)
            bl = polar(base, direction)
            second = tuple(qv * a - bl * d for a, d in zip(base, direction))
            if all(c == 0 for c in second):
                continue
            point = ProjPoint(plane_eval(second))
            if point not in out:
                out.append(point)
            if len(out) >= count:
                break
        return out

    def _conic_setup(self):
        # Base point of the conic inside plane coordinates, found by a
        # deterministic small search; directions complete the triangle.
        quadric = self.equations[1]

        def plane_point(striple):
            return tuple(
                striple[0] * a + striple[1] * b + striple[2] * c
                for a, b, c in zip(*self._basis)
            )

        base = None
        for triple in itertools.product(range(-3, 4), repeat=3):
            if all(c == 0 for c in triple):
                continue
            coords = plane_point(triple)
            if all(c == 0 for c in coords):
                continue
            if quadric.eval(dict(zip(VARS, coords))) == 0:
                base = triple
                break
        if base is None:
            raise ExactArithmeticError(f"no small rational point on {self.name}")
        units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        directions = [u for u in units if not _proportional(u, base)]
        return base, directions[0], directions[1]


def _proportional(u, v) -> bool:
    return all(a * d - b * c == 0 for (a, b), (c, d) in
               itertools.combinations(zip(u, v), 2))


def _plane_basis(linear: MultiPoly) -> tuple[tuple[int, ...], ...]:
    coeffs = [int(linear.coefficient(tuple(1 if i == j else 0 for i in range(4)))) for j in range(4)]
    pivot = next(j for j, c in enumerate(coeffs) if c != 0)
    basis = []
    for j in range(4):
        if j == pivot:
            continue
        vec = [0, 0, 0, 0]
        vec[j] = coeffs[pivot]
        vec[pivot] = -coeffs[j]
        basis.append(tuple(vec))
    return tuple(basis)


def _line(name, eq1, eq2, basis):
    return BoundaryComponent(name, "line", (eq1, eq2), tuple(basis))


def _conic(name, linear, quadric):
    return BoundaryComponent(name, "conic", (linear, quadric), _plane_basis(linear))


LINES = (
    _line("L1", _W - _Z, _Y + _Z, [(1, 0, -1, 1), (0, 1, 0, 0)]),
    _line("L2", _W - _Y, _Y + _Z, [(1, 0, 1, -1), (0, 1, 0, 0)]),
    _line("L3", _W - _Y, _X + _Y, [(1, -1, 1, 0), (0, 0, 0, 1)]),
    _line("L4", _W - _X, _X + _Y, [(1, 1, -1, 0), (0, 0, 0, 1)]),
    _line("L5", _W - _X, _X + _Z, [(1, 1, 0, -1), (0, 0, 1, 0)]),
    _line("L6", _W - _Z, _X + _Z, [(1, -1, 0, 1), (0, 0, 1, 0)]),
    _line("L7", _X + _Y, _Y - _Z, [(0, -1, 1, 1), (1, 0, 0, 0)]),
    _line("L8", _X + _Y, _X - _Z, [(0, 1, -1, 1), (1, 0, 0, 0)]),
    _line("L9", _X - _Y, _Y + _Z, [(0, 1, 1, -1), (1, 0, 0, 0)]),
)

_ROUND_QUADRIC = _X**2 + _Y**2 + _Z**2 + 3 * (_X * _Y + _X * _Z + _Y * _Z)

CONICS = (
    _conic("C1", _W - (_X + _Y + _Z), _ROUND_QUADRIC),
    _conic("C2", _W + (_X + _Y + _Z), _ROUND_QUADRIC),
    _conic("C3", _W - _X, _X**2 + _X * _Y + 3 * _X * _Z - _Y * _Z),
    _conic("C4", _W + _X, _X**2 + _X * _Y + 3 * _X * _Z - _Y * _Z),
    _conic("C5", _W - _Y, _Y**2 + _Y * _Z + 3 * _Y * _X - _Z * _X),
    _conic("C6", _W + _Y, _Y**2 + _Y * _Z + 3 * _Y * _X - _Z * _X),
    _conic("C7", _W - _Z, _Z**2 + _Z * _X + 3 * _Z * _Y - _X * _Y),
    _conic("C8", _W + _Z, _Z**2 + _Z * _X + 3 * _Z * _Y - _X * _Y),
    _conic("C9", _Z - _X, _W * (_Y + 3 * _X) + _X * (_X - _Y)),
    _conic("C10", _Z - _X, _W * (_Y + 3 * _X) - _X * (_X - _Y)),
    _conic("C11", _Y - _Z, _W * (_X + 3 * _Z) + _Z * (_Z - _X)),
    _conic("C12", _Y - _Z, _W * (_X + 3 * _Z) - _Z * (_Z - _X)),
    _conic("C13", _X - _Y, _W * (_Z + 3 * _Y) + _Y * (_Y - _Z)),
    _conic("C14", _X - _Y, _W * (_Z + 3 * _Y) - _Y * (_Y - _Z)),
)

BOUNDARY = LINES + CONICS


def boundary_product_poly() -> MultiPoly:
    """Degree-14 form whose zero locus on the surface is the boundary.

    Product of the quadric W^2+XY+YZ+XZ with the six differences of
    squares of coordinates (two coordinates equal up to sign).
    """
    return (
        (_W**2 + _X * _Y + _Y * _Z + _X * _Z)
        * (_W**2 - _X**2)
        * (_W**2 - _Y**2)
        * (_W**2 - _Z**2)
        * (_X**2 - _Y**2)
        * (_Y**2 - _Z**2)
        * (_X**2 - _Z**2)
    )


def boundary_catalog_json() -> list[dict]:
    return [
        {
            "name": c.name,
            "kind": c.kind,
            "equations": [str(eq) for eq in c.equations],
        }
        for c in BOUNDARY
    ]


# ---------------------------------------------------------------------------
# Membership and the point -> marked cycle conversion.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceMembership:
    inside: bool
    components: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"inside": self.inside, "components": list(self.components)}


def membership(p: ProjPoint) -> SurfaceMembership:
    """Decide whether a surface point lies in the moduli locus.

    Inside iff W^2+XY+YZ+XZ is nonzero and W^2, X^2, Y^2, Z^2 are
    pairwise distinct; otherwise every boundary component containing the
    point is reported, in catalog order.
    """
    if not on_surface(p):
        raise ExactArithmeticError(f"{p} is not on the surface")
    w, x, y, z = p.coords
    squares = {w * w, x * x, y * y, z * z}
    if w * w + x * y + y * z + x * z != 0 and len(squares) == 4:
        return SurfaceMembership(True)
    names = tuple(c.name for c in BOUNDARY if c.contains(p))
    return SurfaceMembership(False, names)


def point_to_cycle(p: ProjPoint) -> MarkedCycle:
    """The marked cycle attached to an interior surface point.

    Uses the closed rational expressions for the map coefficients and
    the six displayed orbit points; agreement with the composite route
    (inverse chart map, then the coefficient formula) is covered by the
    test suite.
    """
    result = membership(p)
    if not result.inside:
        raise BoundaryError(
            f"{p} is on the boundary ({', '.join(result.components) or 'unknown'})"
        )
    w, x, y, z = (Fraction(c) for c in p.coords)
    denom = w * w + x * y + x * z + y * z
    a1 = (w - x) * (w * (x + y + 2 * z) + z * (y - x)) / (denom * (x - z)) - 1
    a2 = (w + y) * (w + z) * (x - w) * (w * (x + y + 2 * z) + x * y - z * z) / (
        denom**2 * (x - z)
    )
    a4 = (y + z) * (w - z) * (x - w) * (w * (2 * x + y + z) + y * z - x * x) / (
        denom * (x + z) * (y + w) * (x - z)
    ) - 1
    f = QuadMap((1, a1, a2, 1, a4, 0))
    points = (
        ProjPoint((0, 1)),
        ProjPoint((1, 0)),
        ProjPoint((1, 1)),
        ProjPoint(((x + z) * (w + y), denom)),
        ProjPoint((w + y, x + y)),
        ProjPoint(((w + z) * (w + y), denom)),
    )
    return MarkedCycle(f, points)


# ---------------------------------------------------------------------------
# Singular locus.
# ---------------------------------------------------------------------------

#: The 11 singular points of the quintic: the triple point, the barycenter
#: of the coordinate triangle, the three coordinate points, and the six
#: one-or-two-minus sign patterns.
SINGULAR_POINTS = tuple(
    ProjPoint(c)
    for c in (
        (1, 0, 0, 0),
        (0, 1, 1, 1),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (-1, -1, 1, 1),
        (-1, 1, -1, 1),
        (-1, 1, 1, -1),
        (1, -1, 1, 1),
        (1, 1, -1, 1),
        (1, 1, 1, -1),
    )
)

_GRADIENT = tuple(SURFACE_FORM.partial(v) for v in VARS)
_HESSIAN = tuple(tuple(g.partial(v) for v in VARS) for g in _GRADIENT)


def gradient(p: ProjPoint) -> tuple[Fraction, ...]:
    assignment = dict(zip(VARS, p.coords))
    return tuple(g.eval(assignment) for g in _GRADIENT)


def is_singular(p: ProjPoint) -> bool:
    return on_surface(p) and all(v == 0 for v in gradient(p))


def _hessian_vanishes(p: ProjPoint) -> bool:
    assignment = dict(zip(VARS, p.coords))
    return all(h.eval(assignment) == 0 for row in _HESSIAN for h in row)


@dataclass(frozen=True)
class SingularReport:
    entries: tuple[dict, ...]
    ok: bool

    def to_json(self) -> dict:
        return {"ok": self.ok, "points": list(self.entries)}


def singular_report() -> SingularReport:
    """Check the expected shape of the singular locus.

    Each of the 11 listed points must kill the gradient, lie outside the
    moduli locus, and exactly the first one (the triple point) must also
    kill every second partial derivative.
    """
    entries = []
    ok = True
    for i, p in enumerate(SINGULAR_POINTS):
        grad_zero = all(v == 0 for v in gradient(p))
        hessian_zero = _hessian_vanishes(p)
        inside = membership(p).inside if on_surface(p) else None
        entry = {
            "point": str(p),
            "on_surface": on_surface(p),
            "gradient_zero": grad_zero,
            "hessian_zero": hessian_zero,
            "triple_point": hessian_zero and grad_zero,
            "in_moduli_locus": inside,
        }
        expected_triple = i == 0
        if not (entry["on_surface"] and grad_zero and hessian_zero == expected_triple and inside is False):
            ok = False
            entry["failure"] = "unexpected local shape"
        entries.append(entry)
    return SingularReport(tuple(entries), ok)
