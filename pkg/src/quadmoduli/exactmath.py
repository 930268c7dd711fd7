"""Exact scalars, projective points and multivariate polynomials.

Everything downstream (maps, moduli charts, the quintic surface, the
point search) is built on three value types:

* ``Rational`` -- arbitrary-precision exact rational, an alias of
  :class:`fractions.Fraction`.  Serialized as ``"num/den"`` with the
  denominator omitted when it is 1, which is exactly ``str(Fraction)``.
* ``ProjPoint`` -- a point of projective n-space over Q held as the
  canonical primitive integer vector: gcd of the coordinates is 1 and
  the first nonzero coordinate is positive.  Equality of points is then
  tuple equality.
* ``MultiPoly`` -- a multivariate polynomial with Rational coefficients,
  stored densely as {exponent vector: coefficient}.  All identity checks
  in the library are expand-and-compare on this type; there is no
  floating point anywhere.

All three are immutable values and safe to share between threads.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction

from .errors import ExactArithmeticError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the "num/den" wire format (den omitted when 1)."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ExactArithmeticError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ExactArithmeticError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    """Inverse of :func:`parse_rational`; bit-exact round trip."""
    return str(Fraction(value))


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply one of ``+ - * /`` to two rationals.

    Division by zero raises :class:`ExactArithmeticError` instead of the
    bare ZeroDivisionError so the CLI can report it as a structured
    rejection.
    """
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ExactArithmeticError("division by zero")
        return a / b
    raise ExactArithmeticError(f"unknown operator {op!r}")


def canon_coords(values) -> tuple[int, ...]:
    """Canonical primitive form of an integer vector: divide by the gcd
    and make the first nonzero entry positive.  Raises on all zeros."""
    g = math.gcd(*values)
    if g == 0:
        raise ExactArithmeticError("projective point needs a nonzero coordinate")
    ints = [c // g for c in values]
    for c in ints:
        if c:
            if c < 0:
                ints = [-e for e in ints]
            break
    return tuple(ints)


class ProjPoint:
    """Point of P^n(Q) in canonical primitive-integer form.

    Accepts any iterable of ints, Fractions or rational strings; clears
    denominators, divides by the gcd and normalizes the sign of the
    first nonzero coordinate to +.  Raises on the zero vector.
    """

    __slots__ = ("coords",)

    coords: tuple[int, ...]

    def __init__(self, values) -> None:
        vals = [v if isinstance(v, (int, Fraction)) else parse_rational(v) for v in values]
        if any(not isinstance(v, int) for v in vals):
            den_lcm = math.lcm(*(Fraction(v).denominator for v in vals))
            vals = [int(v * den_lcm) for v in vals]
        object.__setattr__(self, "coords", canon_coords(vals))

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        """Parse the "[c0:c1:...:cn]" wire format."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ExactArithmeticError(f"not a projective point literal: {text!r}")
        return cls(part.strip() for part in body[1:-1].split(":"))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def height(self) -> int:
        """Naive height: max absolute canonical coordinate."""
        return max(abs(c) for c in self.coords)

    def affine(self) -> Fraction:
        """For a point of P^1 not equal to [1:0], the ratio c0/c1."""
        if len(self.coords) != 2 or self.coords[1] == 0:
            raise ExactArithmeticError(f"{self} has no affine value")
        return Fraction(self.coords[0], self.coords[1])

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "ProjPoint") -> bool:
        return self.coords < other.coords

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    def __repr__(self) -> str:
        return f"ProjPoint({str(self)})"


def _key_grlex(item):
    exps = item[0]
    return (sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Multivariate polynomial with exact rational coefficients.

    ``variables`` is the ordered name tuple; ``terms`` maps dense
    exponent tuples (one entry per variable) to nonzero Fractions.
    Printing and iteration use graded lexicographic order, so equal
    polynomials have equal string forms.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None) -> None:
        object.__setattr__(self, "variables", tuple(variables))
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise ExactArithmeticError("exponent vector length mismatch")
            clean[exps] = coeff
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables, value) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def var(cls, name: str, variables) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    @classmethod
    def vars(cls, variables) -> "tuple[MultiPoly, ...]":
        """Generators of the polynomial ring, in order."""
        variables = tuple(variables)
        return tuple(cls.var(name, variables) for name in variables)

    # -- ring operations ---------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ExactArithmeticError("mixed variable lists")
            return other
        return MultiPoly.const(self.variables, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ExactArithmeticError("negative polynomial power")
        result = MultiPoly.const(self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def eval(self, assignment: dict) -> Fraction:
        """Evaluate at Rational values, one per variable (all required)."""
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise ExactArithmeticError(f"missing variables {missing}")
        point = [Fraction(assignment[v]) for v in self.variables]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for base, e in zip(point, exps):
                if e:
                    term *= base**e
            total += term
        return total

    def compose(self, subst: dict) -> "MultiPoly":
        """Substitute a MultiPoly for every variable and expand.

        All substituted polynomials must share one variable list, which
        becomes the variable list of the result.
        """
        missing = [v for v in self.variables if v not in subst]
        if missing:
            raise ExactArithmeticError(f"missing variables {missing}")
        images = [subst[v] for v in self.variables]
        target_vars = images[0].variables
        for img in images:
            if img.variables != target_vars:
                raise ExactArithmeticError("mixed variable lists in substitution")
        result = MultiPoly.zero(target_vars)
        power_cache = [{0: MultiPoly.const(target_vars, 1)} for _ in images]
        for exps, coeff in self.terms.items():
            term = MultiPoly.const(target_vars, coeff)
            for i, e in enumerate(exps):
                if e not in power_cache[i]:
                    power_cache[i][e] = images[i] ** e
                term = term * power_cache[i][e]
            result = result + term
        return result

    def partial(self, name: str) -> "MultiPoly":
        """Partial derivative with respect to one variable."""
        idx = self.variables.index(name)
        terms: dict = {}
        for exps, coeff in self.terms.items():
            if exps[idx] == 0:
                continue
            new = list(exps)
            new[idx] -= 1
            terms[tuple(new)] = terms.get(tuple(new), Fraction(0)) + coeff * exps[idx]
        return MultiPoly(self.variables, terms)

    # -- equality and printing ----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, coeff in sorted(self.terms.items(), key=_key_grlex, reverse=True):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps)
                if e
            ]
            body = "*".join(factors)
            if not factors:
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append(body)
            elif coeff == -1:
                chunks.append(f"-{body}")
            else:
                chunks.append(f"{coeff}*{body}")
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def random_rational(rng, max_num: int = 30, max_den: int = 12) -> Fraction:
    """Small random rational for seeded sampling; never returns huge values."""
    num = rng.randint(-max_num, max_num)
    den = rng.randint(1, max_den)
    return Fraction(num, den)


def distinct_rationals(rng, count: int, avoid=(0, 1)) -> list[Fraction]:
    """Seeded sample of pairwise-distinct rationals outside ``avoid``."""
    out: list[Fraction] = []
    avoid_set = {Fraction(a) for a in avoid}
    while len(out) < count:
        q = random_rational(rng)
        if q in avoid_set or q in out:
            continue
        out.append(q)
    return out


def proj_points_distinct(points) -> bool:
    """True when canonical points are pairwise different."""
    seen = set()
    for p in points:
        if p.coords in seen:
            return False
        seen.add(p.coords)
    return True


def all_pairs(seq):
    return itertools.combinations(seq, 2)
