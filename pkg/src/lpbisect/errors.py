"""Exception types raised by the solvers and the LPT reader."""


class LPError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(LPError, ValueError):
    """Array shapes do not agree with the problem dimensions."""


class IterationLimitError(LPError, RuntimeError):
    """A pivot, doubling or bisection budget ran out before a verdict was reached.

    Never a statement about the problem itself: exhausting a budget says nothing
    about feasibility or boundedness.
    """


class InstanceTooLargeError(LPError, ValueError):
    """The brute-force vertex enumeration was asked to handle too many candidates."""


class LPTSyntaxError(LPError, ValueError):
    """Malformed LPT input. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
