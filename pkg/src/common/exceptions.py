"""Custom exceptions for the 2-SCSS toolkit."""


class InstanceFormatError(ValueError):
    """Raised when an instance or solution file cannot be parsed.

    Carries the 1-based line number of the offending record so diagnostics can point
    straight at it. A line number of 0 means the problem concerns the file as a whole
    (for example a missing header or a wrong edge count).
    """

    def __init__(self, message: str, line_no: int = 0):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no else ""
        super().__init__(f"{prefix}{message}")


class InvalidInstanceError(ValueError):
    """Raised when a graph or instance violates its structural invariants.

    Examples are dangling vertex ids, equal terminals, or non-positive demands.
    """

    pass


class WalkError(ValueError):
    """Raised when a walk is broken or has the wrong endpoints.

    A walk is broken when consecutive edges do not share head and tail, or when it
    references an edge id that does not exist in the graph.
    """

    pass


class WeightOverflowError(OverflowError):
    """Raised when a weight computation leaves the signed 64-bit range."""

    pass


class InfeasibleError(RuntimeError):
    """Raised when the requested connectivity does not exist.

    For the solver this means no s->t or no t->s path; for the token game it means the
    end state cannot be reached from the start state.
    """

    pass


class FlowInfeasibleError(InfeasibleError):
    """Raised when the maximum flow is smaller than the requested flow value."""

    pass


class DemandShapeError(ValueError):
    """Raised when an operation is called with demands it does not support.

    The exact solver handles only instances with k2 = 1.
    """

    pass


class ReplayError(RuntimeError):
    """Raised when a game play cannot be replayed from the start state."""

    pass


class OracleLimitExceeded(RuntimeError):
    """Raised when the brute-force oracle exceeds its path or time limits.

    Attributes:
        count: Number of paths (or candidate solutions) enumerated when the limit hit
    """

    def __init__(self, message: str, count: int):
        self.count = count
        super().__init__(f"{message} (reached {count})")


class TimeBudgetExceeded(RuntimeError):
    """Raised when a solve or oracle run exceeds its wall-clock budget."""

    pass


class StructureError(ValueError):
    """Raised when a structural operation is called outside its precondition.

    Typical cases: rewiring an already path-reverse-compatible pair, or forward walks
    that are not pairwise edge-disjoint.
    """

    pass


class GridTilingError(ValueError):
    """Raised for invalid Grid Tiling instances or generator parameters.

    Covers empty cells, non-star diagonals, and dimensions whose weights would overflow.
    """

    pass
