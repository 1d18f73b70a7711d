"""Exception types raised by the triad engines."""

from __future__ import annotations


class TriadError(Exception):
    """Base class for every error raised by this package."""


class SequenceParseError(TriadError, ValueError):
    """A weight-sequence expression could not be parsed."""


class IndexBeyondExplicitList(TriadError, IndexError):
    def __init__(self, k: int, length: int) -> None:
        super().__init__(f"index {k} is beyond explicit list of length {length}")
        self.k = k
        self.length = length


class NoPolynomialSequence(TriadError, ArithmeticError):
    """Raised when ``i_n == 0``: no degree-graded solution exists past ``n``."""

    def __init__(self, n: int) -> None:
        super().__init__(f"i_{n} = 0, no polynomial sequence of degree {n + 1} exists")
        self.n = n


class DegenerateBasis(TriadError, ValueError):
    pass


class UnknownName(TriadError, LookupError):
    pass


class NoOracle(TriadError, LookupError):
    pass


class IndexOutOfTriangle(TriadError, IndexError):
    pass


class EnumerationBoundExceeded(TriadError, ValueError):
    pass
