"""Exception hierarchy shared by every module of the package."""


class DetdioError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(DetdioError, ValueError):
    pass


class NotSquare(DetdioError, ValueError):
    pass


class ShapeError(DetdioError, ValueError):
    pass


class CapExceeded(DetdioError):
    """Too many column subsets to enumerate under the configured cap."""


class IndexOutOfRange(DetdioError, IndexError):
    pass


class RankDeficient(DetdioError, ValueError):
    """The matrix is not of full row rank, so its greatest divisor is undefined."""


class Unsolvable(DetdioError):
    pass


class InvalidInstance(DetdioError, ValueError):
    """An equation instance violates its own preconditions (e.g. d <= 0 with rows present)."""


class DegenerateForm(DetdioError, ValueError):
    pass


class ParseError(DetdioError, ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InternalError(DetdioError, AssertionError):
    """An arithmetic invariant failed; this is a bug, never a user error."""
