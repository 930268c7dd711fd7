"""Catalog of closed-form identities behind the surface model.

Each record re-proves one asserted identity, either by full polynomial
expansion over Q (records are then exact theorems) or, where the claim
is birational, by exact evaluation on a seeded sample of surface points
drawn from several distinct curves.  A failed record carries a witness.

Record keys:

  a  boundary product: its zero locus on the surface supports the 23
     boundary components and misses the moduli locus
  b  slice W=X factors into boundary components
  c  slices W=-Y, X=-Y, Z=X factor into boundary components
  d  two product identities reducing resultant factors to known ones
  e  hyperplane W=X+Y+Z section factors into a conic and a cubic curve
  f  parametrization of the plane cubic and its pullbacks of the two
     surface forms
  g  conic parametrization underlying the fixed-point family
  h  degree-2/3 invariants of the order-3 plane action and their cubic
     relation
  i  the order-3 quotient of the surface is again a quintic of the same
     shape (sampled)
  j  the Z=0 slice is the quintic plane model of the slice curve
  sigma6-generator  which printed linear action realizes the cycle
     shift (sampled + expansion)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import families, surface
from .errors import ExcludedParameterError, QuadModuliError
from .exactmath import MultiPoly, ProjPoint
from .moduli import ModelPoint, sigma_action

VARS = surface.VARS
_W, _X, _Y, _Z = MultiPoly.vars(VARS)
_IDENTITY_SUBST = {v: MultiPoly.var(v, VARS) for v in VARS}


@dataclass(frozen=True)
class IdentityRecord:
    key: str
    name: str
    status: str
    witness: str | None = None
    detail: str | None = None

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "name": self.name,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }


def _slice(poly: MultiPoly, **replacements) -> MultiPoly:
    subst = dict(_IDENTITY_SUBST)
    for var, image in replacements.items():
        subst[var] = image
    return poly.compose(subst)


def _record(key, name, ok, witness=None, detail=None) -> IdentityRecord:
    return IdentityRecord(key, name, "verified" if ok else "failed", witness if not ok else None, detail)


def inside_sample_points(seed: int = 0, count: int = 24) -> list[ProjPoint]:
    """Seeded exact points of the moduli locus, spread over the known
    curves (three elliptic slices, torsion translates, the genus-0
    family) plus the two sporadic points."""
    rng = random.Random(seed)
    points: list[ProjPoint] = list(SPORADIC_POINTS)
    elliptic_params = [(n, t, s) for n in (2, 3, 4) for t in (0, 1, 2) for s in ("Z0", "Y0", "X0")]
    rng.shuffle(elliptic_params)
    genus0_params = [Fraction(num, den) for num in range(2, 10) for den in (1, 2, 3)]
    rng.shuffle(genus0_params)
    sources = [(("elliptic",) + p) for p in elliptic_params] + [("genus0", p) for p in genus0_params]
    for spec in sources:
        if len(points) >= count:
            break
        try:
            if spec[0] == "elliptic":
                member = families.elliptic_family_map(spec[1], slice=spec[3], torsion=spec[2])
            else:
                member = families.genus0_family(spec[1])
        except ExcludedParameterError:
            continue
        if member.surface_point not in points:
            points.append(member.surface_point)
    if len(points) < count:
        raise QuadModuliError("could not assemble enough sample points")
    return points


#: The two rational points of the moduli locus reported off every known
#: curve.  (They are printed with the W coordinate last in the source
#: list; here they are in [W:X:Y:Z] order, which the quintic confirms.)
SPORADIC_POINTS = (
    ProjPoint((16685, -46572, 20403, 35913)),
    ProjPoint((62257, -75523, 54607, 72443)),
)


def check_boundary_support(product: MultiPoly, inside_points, samples_per_component: int = 10):
    """Shared checker for record (a); returns (ok, witness)."""
    for comp in surface.BOUNDARY:
        for p in comp.sample(samples_per_component):
            if not surface.on_surface(p):
                return False, f"{comp.name} sample {p} off the surface"
            if product.eval(dict(zip(VARS, p.coords))) != 0:
                return False, f"product nonzero at {p} on {comp.name}"
    for p in inside_points:
        if product.eval(dict(zip(VARS, p.coords))) == 0:
            return False, f"product vanishes at interior point {p}"
    return True, None


def _check_a(inside_points) -> IdentityRecord:
    ok, witness = check_boundary_support(surface.boundary_product_poly(), inside_points)
    return _record("a", "boundary product supports the 23-component boundary", ok, witness,
                   detail="23 components x 10 points each, plus interior nonvanishing")


def _check_b() -> IdentityRecord:
    gamma = surface.SURFACE_FORM
    lhs = _slice(gamma, W=_X)
    rhs = (_X + _Z) * (_X + _Y) ** 2 * (_X**2 + _X * _Y + 3 * _X * _Z - _Y * _Z)
    return _record("b", "slice W=X factors as (X+Z)(X+Y)^2(X^2+XY+3XZ-YZ)",
                   (lhs - rhs).is_zero(), "expansion mismatch")


def _check_c() -> IdentityRecord:
    gamma = surface.SURFACE_FORM
    cases = [
        ("W=-Y", _slice(gamma, W=-_Y),
         (_X + _Y) * (_Y + _Z) ** 2 * (3 * _X * _Y + _Y**2 - _X * _Z + _Y * _Z)),
        ("X=-Y", _slice(gamma, X=-_Y),
         (-_W + _Y) * (_W + _Y) * (_Y - _Z) * (_Y + _Z) ** 2),
        ("Z=X", _slice(gamma, Z=_X),
         (_X + _Y) * (_W * (_Y + 3 * _X) + _X * (_X - _Y)) * (_W * (_Y + 3 * _X) - _X * (_X - _Y))),
    ]
    for label, lhs, rhs in cases:
        if not (lhs - rhs).is_zero():
            return _record("c", "slices W=-Y, X=-Y, Z=X factor into boundary components",
                           False, f"slice {label}")
    return _record("c", "slices W=-Y, X=-Y, Z=X factor into boundary components", True)


def _check_d() -> IdentityRecord:
    gamma = surface.SURFACE_FORM
    lin = _X + _Y + 2 * _Z
    first = (
        (_W * lin + _X * _Y - _Z**2) * (-_W * lin + _X * _Y - _Z**2) * (_X + _Y) + gamma
        - (_Y - _Z) * (_Y + _Z) * (_X - _Z) * (_W**2 + _X * _Y + _Y * _Z + _X * _Z)
    )
    second = (
        (_W * lin + _Z * (_Y - _X)) * (-_W * lin + _Z * (_Y - _X)) * (_X + _Y) + gamma
        - (_Y - _Z) * (_Y + _Z) * (_X - _Z) * (_W - _X) * (_W + _X)
    )
    ok = first.is_zero() and second.is_zero()
    which = "first" if not first.is_zero() else "second"
    return _record("d", "resultant-factor product identities against the surface form",
                   ok, f"{which} identity fails")


def _check_e() -> IdentityRecord:
    gamma = surface.SURFACE_FORM
    lhs = _slice(gamma, W=_X + _Y + _Z)
    rhs = (_X**2 + _Y**2 + _Z**2 + 3 * (_X * _Y + _X * _Z + _Y * _Z)) * (
        (_X + _Y + _Z) ** 3 - _X**2 * _Y - _Y**2 * _Z - _X * _Z**2
    )
    return _record("e", "hyperplane W=X+Y+Z section splits into a conic and a cubic",
                   (lhs - rhs).is_zero(), "expansion mismatch")


def _check_f() -> IdentityRecord:
    mvars = ("m",)
    (m,) = MultiPoly.vars(mvars)
    half = Fraction(1, 2)
    comp_int = {
        "X": -(m**3) + 2 * m**2 - 3 * m + 1,
        "Y": m**3 - m + 1,
        "Z": m**3 - 2 * m**2 + m - 1,
    }
    comp_half = {k: half * v for k, v in comp_int.items()}
    zero_w = MultiPoly.zero(mvars)
    cubic_pull = surface.PLANE_CUBIC_FORM.compose({"W": zero_w, **comp_int})
    if not cubic_pull.is_zero():
        return _record("f", "cubic parametrization", False, "image not on the cubic")
    t = m**2 - m
    f3_pull = surface.CUBIC_FORM.compose({"W": zero_w, **comp_half})
    f5_pull = surface.QUINTIC_FORM.compose({"W": zero_w, **comp_half})
    ok3 = (f3_pull - (-4) * t**3).is_zero()
    ok5 = (f5_pull - (-4) * t**3 * (t + 1) ** 3).is_zero()
    # scaling-free consequence: F5/F3 pulls back to (m^2-m+1)^3
    f3_int = surface.CUBIC_FORM.compose({"W": zero_w, **comp_int})
    f5_int = surface.QUINTIC_FORM.compose({"W": zero_w, **comp_int})
    ok_ratio = (f5_int - f3_int * (t + 1) ** 3).is_zero()
    ok = ok3 and ok5 and ok_ratio
    witness = None if ok else ("F3 pullback" if not ok3 else "F5 pullback" if not ok5 else "ratio")
    return _record(
        "f", "plane cubic parametrization and its F3/F5 pullbacks", ok, witness,
        detail="pullback constants -4(m^2-m)^3 and -4(m^2-m)^3(m^2-m+1)^3 hold for the "
        "half-scaled parametrization c/2; with integer c both scale by 2^3, and the "
        "scaling-free ratio F5/F3 = (m^2-m+1)^3 holds either way",
    )


def _check_g() -> IdentityRecord:
    pvars = ("p",)
    (p,) = MultiPoly.vars(pvars)
    j_num = p**2 + p + 1
    m_num = 2 * p + 1
    den = 1 - p**2
    ok = (j_num**2 - (m_num**2 - m_num * den + den**2)).is_zero()
    return _record("g", "conic point (j,m) = ((p^2+p+1)/(1-p^2), (2p+1)/(1-p^2)) satisfies j^2 = m^2-m+1",
                   ok, "expansion mismatch")


def _check_h() -> IdentityRecord:
    xvars = ("x1", "x2")
    x1, x2 = MultiPoly.vars(xvars)
    v1 = x2**2 + x1 * x2 + x1**2
    v2 = x1 * x2**2 + x1**2 * x2
    v3 = x1**3 - x2**3 - 3 * x1 * x2**2
    relation = (v1**3 - 9 * v2**2 - 3 * v2 * v3 - v3**2).is_zero()
    shift = {"x1": x2, "x2": -x1 - x2}
    invariant = all((v.compose(shift) - v).is_zero() for v in (v1, v2, v3))
    ok = relation and invariant
    return _record("h", "order-3 invariants v1, v2, v3: invariance and v1^3 = 9v2^2 + 3v2v3 + v3^2",
                   ok, "relation" if not relation else "invariance")


_QUOTIENT_CUBIC = (_Z + 2 * _X) * (16 * _X**2 - 8 * _X * _Z + _Z**2 - 27 * _Y**2 - 9 * _Y * _Z) - 108 * _Y**3
_QUOTIENT_QUINTIC = _X**2 * (9 * _Y**2 + 3 * _Y * _Z + _Z**2) * (2 * _X - 3 * _Z) - (
    3 * _Y - _Z
) * (9 * _Y**2 + 3 * _Y * _Z + _Z**2) ** 2


def quotient_image(p: ProjPoint):
    """Invariant coordinates of a surface point under the order-3 part
    of the action: returns (relation value, image point coordinates)."""
    w, x, y, z = (Fraction(c) for c in p.coords)
    if w == 0:
        raise QuadModuliError("quotient chart needs W nonzero")
    x0 = (x + y + z) / w
    u1 = (x - y) / w
    u2 = (y - z) / w
    v1 = u2**2 + u1 * u2 + u1**2
    v2 = u1 * u2**2 + u1**2 * u2
    v3 = u1**3 - u2**3 - 3 * u1 * u2**2
    eliminated = (
        x0**3 * (32 - 2 * v1) + 3 * v3 * x0**2 - 6 * v1 * x0 - 12 * v2 + v3 - v1 * (v3 - 3 * v2)
    )
    return eliminated, (v1, v1 * x0, v2, v3)


def _check_i(inside_points) -> IdentityRecord:
    checked = 0
    for p in inside_points:
        if p.coords[0] == 0:
            continue
        eliminated, image = quotient_image(p)
        if eliminated != 0:
            return _record("i", "order-3 quotient lands on the companion quintic", False,
                           f"invariant elimination fails at {p}")
        if all(c == 0 for c in image):
            continue
        wq, xq, yq, zq = image
        assignment = {"W": Fraction(0), "X": xq, "Y": yq, "Z": zq}
        lhs = wq**2 * _QUOTIENT_CUBIC.eval(assignment)
        rhs = _QUOTIENT_QUINTIC.eval(assignment)
        if lhs != rhs:
            return _record("i", "order-3 quotient lands on the companion quintic", False,
                           f"quotient quintic fails at {p}")
        checked += 1
    ok = checked >= 20
    return _record("i", "order-3 quotient lands on the companion quintic", ok,
                   None if ok else f"only {checked} usable sample points",
                   detail=f"verified on {checked} exact points across distinct curves")


def _check_j() -> IdentityRecord:
    gamma = surface.SURFACE_FORM
    lhs = _slice(gamma, Z=MultiPoly.zero(VARS))
    rhs = _W**2 * (_X**3 + 3 * _X**2 * _Y + 4 * _X * _Y**2 + _Y**3) - _Y**2 * _X**3
    return _record("j", "slice Z=0 is W^2(X^3+3X^2Y+4XY^2+Y^3) = Y^2X^3",
                   (lhs - rhs).is_zero(), "expansion mismatch")


def _compose_linear(subst, times):
    images = dict(_IDENTITY_SUBST)
    for _ in range(times):
        images = {v: images[v].compose(subst) for v in VARS}
    return images


def _check_sigma_generator(inside_points) -> IdentityRecord:
    gamma = surface.SURFACE_FORM
    generator = {"W": -_W, "X": _Y, "Y": _Z, "Z": _X}
    variant = {"W": -_W, "X": _Z, "Y": _X, "Z": _Y}
    name = "cycle shift on the surface is [W:X:Y:Z] -> [-W:Y:Z:X]"
    if not (gamma.compose(generator) - gamma).is_zero():
        return _record("sigma6-generator", name, False, "generator does not preserve the surface")
    sixth = _compose_linear(generator, 6)
    if not all((sixth[v] - _IDENTITY_SUBST[v]).is_zero() for v in VARS):
        return _record("sigma6-generator", name, False, "generator is not of order 6")
    # the two printed forms are mutually inverse
    both = {v: variant[v].compose(generator) for v in VARS}
    if any(not (both[v] - _IDENTITY_SUBST[v]).is_zero() for v in VARS):
        return _record("sigma6-generator", name, False, "printed variant is not the inverse")
    checked = 0
    for p in inside_points:
        try:
            model = ModelPoint(6, surface.surface_to_model(p))
            shifted = sigma_action(6, model)
        except QuadModuliError:
            continue
        if surface.model_to_surface(shifted) != surface.sigma_surface(p):
            return _record("sigma6-generator", name, False, f"equivariance fails at {p}")
        checked += 1
    ok = checked >= 20
    return _record(
        "sigma6-generator", name, ok,
        None if ok else f"only {checked} usable sample points",
        detail="selected generator [-W:Y:Z:X] (equivariant with the model shift on "
        f"{checked} sample points); the variant [-W:Z:X:Y] is its inverse",
    )


def verify_identities(seed: int = 0) -> list[IdentityRecord]:
    """Run the whole catalog; deterministic for a fixed seed."""
    pool = inside_sample_points(seed)
    return [
        _check_a(pool),
        _check_b(),
        _check_c(),
        _check_d(),
        _check_e(),
        _check_f(),
        _check_g(),
        _check_h(),
        _check_i(pool),
        _check_j(),
        _check_sigma_generator(pool),
    ]


def boundary_permutation() -> dict[str, str]:
    """The permutation induced on the 23 boundary components by the
    cycle-shift action; raises if it is not a well-defined bijection."""
    perm: dict[str, str] = {}
    for comp in surface.BOUNDARY:
        candidates: set[str] | None = None
        for p in comp.sample(6):
            containing = {c.name for c in surface.BOUNDARY if c.contains(surface.sigma_surface(p))}
            candidates = containing if candidates is None else candidates & containing
        if not candidates or len(candidates) != 1:
            raise QuadModuliError(f"image of {comp.name} is not a single component: {candidates}")
        perm[comp.name] = candidates.pop()
    if sorted(perm.values()) != sorted(perm.keys()):
        raise QuadModuliError("induced map on components is not a bijection")
    return perm
