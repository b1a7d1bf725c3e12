"""Exception types raised by altnf."""


class AltnfError(Exception):
    """Base class for every error raised by this package."""


class InvalidDegreeError(AltnfError, ValueError):
    pass


class DegreeMismatchError(AltnfError, ValueError):
    pass


class IndexRangeError(AltnfError, ValueError):
    pass


class DegreeTooSmallError(IndexRangeError):
    """A word mentions a generator that does not exist at the requested degree."""

    def __init__(self, message, minimal_degree):
        super().__init__(message)
        self.minimal_degree = minimal_degree


class ParseError(AltnfError, ValueError):
    """Malformed textual input; ``position`` is a 0-based character offset."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} (at position {position})")
        self.text = text
        self.position = position


class NotEvenError(AltnfError, ValueError):
    pass


class ConsistencyError(AltnfError, RuntimeError):
    """An internal invariant failed; this always indicates a bug."""


class BudgetExhaustedError(AltnfError, RuntimeError):
    pass
