"""Exception types raised by the library.

All of them derive from ``ValueError`` so callers that only care about
bad input can catch that.
"""


class ComplexError(ValueError):
    """Base class for errors raised by gcdcomplex."""


class EmptyComplexError(ComplexError):
    pass


class DisconnectedError(ComplexError):
    pass


class InvalidPathError(ComplexError):
    pass


class InvalidMoveError(ComplexError):
    pass


class NotASimplexError(ComplexError):
    pass


class EnumerationLimitError(ComplexError):
    def __init__(self, size, limit):
        super().__init__(f"enumeration guard exceeded: {size} > {limit}")
        self.size = size
        self.limit = limit
