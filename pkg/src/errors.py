"""Exception hierarchy for the MWIS toolkit.

Graph construction and file parsing errors subclass ValueError so callers
that only care about "bad input" can catch that.
"""


class MwisError(Exception):
    """Base class for every error raised by this package."""


# --- graph values and predicates ---

class GraphError(MwisError, ValueError):
    pass


class DuplicateNodeError(GraphError):
    pass


class NonPositiveWeightError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class UnknownEndpointError(GraphError):
    pass


class UnknownNodeError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class AcyclicGraphError(GraphError):
    pass


class HasCycleError(GraphError):
    pass


class NotApplicableError(GraphError):
    pass


class NotCusError(GraphError):
    pass


class OverlappingComponentsError(GraphError):
    pass


# --- graph file format ---

class GraphFormatError(MwisError, ValueError):
    """Raised for malformed graph files. Carries the 1-based line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class MalformedHeaderError(GraphFormatError):
    pass


class MalformedLineError(GraphFormatError):
    pass


class CountMismatchError(GraphFormatError):
    pass


class BadWeightError(GraphFormatError):
    pass


# --- generator ---

class GeneratorSpecError(MwisError, ValueError):
    pass


class InvalidDensityError(GeneratorSpecError):
    pass


class InvalidWeightRangeError(GeneratorSpecError):
    pass


# --- oracle / harness ---

class TooLargeError(MwisError, ValueError):
    pass


class ZeroOptimumError(MwisError, ValueError):
    pass


class MissingBaselineError(MwisError, ValueError):
    pass


class SolveTimeout(MwisError, RuntimeError):
    pass
