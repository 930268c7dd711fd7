"""Search engines, sieve tables and point classification."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from ..errors import QuadModuliError
from ..exactmath import ProjPoint, canon_coords
from .. import surface

try:  # compiled kernel is optional
    from . import _speedups as _kernel
except ImportError:  # pragma: no cover - depends on build environment
    _kernel = None

#: Beyond this height the compiled kernel's fixed-width integers could
#: overflow, so the dispatcher falls back to the big-integer engine.
KERNEL_MAX_HEIGHT = 100_000

DEFAULT_SIEVE_MODS = (5, 7, 9, 11)


def kernel_available() -> bool:
    return _kernel is not None


def engine_name(height: int | None = None, engine: str | None = None) -> str:
    """Engine the dispatcher would pick: 'kernel' or 'python'."""
    if engine in ("kernel", "python"):
        return engine
    if engine is not None:
        raise QuadModuliError(f"unknown engine {engine!r}")
    if _kernel is not None and (height is None or height <= KERNEL_MAX_HEIGHT):
        return "kernel"
    return "python"


def sieve_filter(residues, m: int) -> bool:
    """Modular prefilter on a full coordinate quadruple.

    True iff W^2*F3(X,Y,Z) is congruent to F5(X,Y,Z) mod m for the given
    residues; a true surface point passes for every modulus (soundness),
    while most non-points fail for some small modulus.
    """
    w, x, y, z = (int(r) % m for r in residues)
    return (w * w * surface.cubic_form_at(x, y, z) - surface.quintic_form_at(x, y, z)) % m == 0


@lru_cache(maxsize=None)
def _pair_table(m: int) -> bytes:
    """Table over (F3 mod m, F5 mod m) of whether any W residue works."""
    squares = sorted({(w * w) % m for w in range(m)})
    table = bytearray(m * m)
    for a in range(m):
        for s in squares:
            table[a * m + (s * a) % m] = 1
    return bytes(table)


def _sieve_tables(mods) -> tuple[tuple[int, bytes], ...]:
    for m in mods:
        if not 2 <= m <= 64:
            raise QuadModuliError("sieve moduli must be small (2..64)")
    return tuple((m, _pair_table(m)) for m in mods)


def enumerate_shard_python(height: int, shard: int, nshards: int, tables) -> list:
    """Raw integer solutions (W, X, Y, Z) for one shard of the X range.

    Solutions are not canonicalized and non-primitive triples are
    visited too; projective deduplication happens in the caller.
    """
    h = height
    f3 = surface.cubic_form_at
    f5 = surface.quintic_form_at
    isqrt = math.isqrt
    out: list[tuple[int, int, int, int]] = []
    full_range = range(-h, h + 1)
    for x in range(-h + shard, h + 1, nshards):
        for y in full_range:
            for z in full_range:
                if x == 0 and y == 0 and z == 0:
                    out.append((1, 0, 0, 0))
                    continue
                a = f3(x, y, z)
                b = f5(x, y, z)
                if a == 0:
                    if b == 0:
                        out.extend((w, x, y, z) for w in full_range)
                    continue
                rejected = False
                for m, table in tables:
                    if not table[(a % m) * m + (b % m)]:
                        rejected = True
                        break
                if rejected:
                    continue
                quot, rem = divmod(b, a)
                if rem != 0 or quot < 0:
                    continue
                w = isqrt(quot)
                if w * w != quot or w > h:
                    continue
                out.append((w, x, y, z))
                if w:
                    out.append((-w, x, y, z))
    return out


def naive_enumeration(height: int) -> list[ProjPoint]:
    """Reference oracle: every canonical quadruple, exact defect, no sieve."""
    h = height
    pts = []
    rng = range(-h, h + 1)
    gcd = math.gcd
    for w in rng:
        for x in rng:
            for y in rng:
                lead_wxy = w or x or y
                for z in rng:
                    if (lead_wxy or z) <= 0:
                        continue
                    if gcd(w, x, y, z) != 1:
                        continue
                    if w * w * surface.cubic_form_at(x, y, z) == surface.quintic_form_at(x, y, z):
                        pts.append(ProjPoint((w, x, y, z)))
    return sorted(pts, key=lambda p: p.coords)


@dataclass(frozen=True)
class Classification:
    """Which known locus a surface point belongs to.

    ``kind`` is one of boundary, cubic-curve-C, slice-X0, slice-Y0,
    slice-Z0, hyperplane-W±(X+Y+Z), sporadic; boundary carries the names
    of all containing components in catalog order.
    """

    kind: str
    components: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        if self.kind == "boundary":
            return f"boundary({','.join(self.components)})"
        return self.kind

    def to_json(self):
        if self.kind == "boundary":
            return {"kind": self.kind, "components": list(self.components)}
        return {"kind": self.kind}


def classify_point(p: ProjPoint) -> Classification:
    """First matching class in the fixed precedence order.

    Boundary always wins; then the plane cubic, the coordinate slices,
    the hyperplanes W = ±(X+Y+Z); anything else is sporadic.
    """
    result = surface.membership(p)
    if not result.inside:
        return Classification("boundary", result.components)
    w, x, y, z = p.coords
    if x**3 + y**3 + z**3 - (x * x * y + y * y * z + z * z * x) == 0:
        return Classification("cubic-curve-C")
    if x == 0:
        return Classification("slice-X0")
    if y == 0:
        return Classification("slice-Y0")
    if z == 0:
        return Classification("slice-Z0")
    if w == x + y + z or w == -(x + y + z):
        return Classification("hyperplane-W±(X+Y+Z)")
    return Classification("sporadic")


@dataclass(frozen=True)
class SearchRecord:
    """One orbit of surface points found by the search."""

    orbit_rep: ProjPoint
    classification: Classification
    height: int

    @property
    def point(self) -> ProjPoint:
        return self.orbit_rep

    def to_json(self) -> dict:
        data = {
            "height": self.height,
            "orbit_rep": str(self.orbit_rep),
            "classification": self.classification.label,
        }
        return data

    def csv_row(self) -> list:
        w, x, y, z = self.orbit_rep.coords
        return [self.height, str(self.orbit_rep), self.classification.label, w, x, y, z]


CSV_COLUMNS = ["height", "orbit_rep", "classification", "W", "X", "Y", "Z"]


def _run_shard(engine: str, height: int, shard: int, nshards: int, tables):
    if engine == "kernel":
        return _kernel.enumerate_shard(height, shard, nshards, list(tables))
    return enumerate_shard_python(height, shard, nshards, tables)


def search_surface(
    height: int,
    shards: int = 1,
    sieve_mods=DEFAULT_SIEVE_MODS,
    engine: str | None = None,
) -> list[SearchRecord]:
    """All orbits of rational surface points up to the height bound.

    Every canonical point with coordinates bounded by ``height`` and
    zero defect is found exactly once; orbits under the order-6 action
    are reported once, through their lexicographically smallest member.
    The output is sorted by (height, orbit representative) and does not
    depend on the shard count.
    """
    if height < 1:
        raise QuadModuliError("height must be >= 1")
    if shards < 1:
        raise QuadModuliError("shards must be >= 1")
    chosen = engine_name(height, engine)
    tables = _sieve_tables(tuple(sieve_mods))
    if shards == 1:
        raw_lists = [_run_shard(chosen, height, 0, 1, tables)]
    else:
        with ThreadPoolExecutor(max_workers=min(shards, 8)) as pool:
            futures = [
                pool.submit(_run_shard, chosen, height, shard, shards, tables)
                for shard in range(shards)
            ]
            raw_lists = [f.result() for f in futures]
    canonical = {canon_coords(t) for chunk in raw_lists for t in chunk}
    reps = {surface.orbit_rep_coords(t) for t in canonical}
    records = []
    for coords in sorted(reps, key=lambda t: (max(abs(c) for c in t), t)):
        rep = ProjPoint(coords)
        records.append(SearchRecord(rep, classify_point(rep), rep.height))
    return records
