"""Exception hierarchy for quadmoduli.

Every mathematically meaningful rejection (division by zero, degenerate
map, boundary point, excluded family parameter) raises a subclass of
QuadModuliError so callers can distinguish "bad input for this chart"
from programming errors.
"""


class QuadModuliError(Exception):
    """Base class for all library-level errors."""

    kind = "error"

    def payload(self) -> dict:
        return {"type": self.kind, "message": str(self)}


class ExactArithmeticError(QuadModuliError):
    """Division by zero, all-zero projective vector, missing variable."""

    kind = "arithmetic"


class DegenerateMapError(QuadModuliError):
    """Coefficient vector with vanishing resultant: not a degree-2 map."""

    kind = "degenerate-map"


class BoundaryError(QuadModuliError):
    """Point outside the open chart of a birational map."""

    kind = "boundary"


class ExcludedParameterError(QuadModuliError):
    """Family parameter hitting a coincidence or vanishing denominator."""

    kind = "excluded-parameter"
