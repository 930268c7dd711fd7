"""Height-bounded exhaustive search for rational points of the surface.

The engine enumerates integer triples (X, Y, Z) up to the height bound
and solves W^2 * F3(X,Y,Z) = F5(X,Y,Z) exactly for integer W, with a
table-driven modular sieve rejecting most triples before any
big-integer work.  A compiled kernel (Cython) is used when available;
the pure-Python fallback implements the identical algorithm, and a
no-sieve quadruple enumeration is kept as the reference oracle.

Found points are deduplicated by the lexicographically smallest member
of their orbit under the order-6 action, classified against the known
curves, and returned sorted, so the output is independent of shard
count and scheduling.
"""

from ._engine import (
    Classification,
    SearchRecord,
    classify_point,
    engine_name,
    kernel_available,
    naive_enumeration,
    search_surface,
    sieve_filter,
)

__all__ = [
    "Classification",
    "SearchRecord",
    "classify_point",
    "engine_name",
    "kernel_available",
    "naive_enumeration",
    "search_surface",
    "sieve_filter",
]
