"""Exception types shared across the package.

Every domain failure raises a subclass of :class:`DualQuatError`, so callers
can catch one base class at an API boundary and still branch on the precise
condition when they need to.
"""

from __future__ import annotations

__all__ = [
    "DualQuatError",
    "NonFiniteError",
    "NotInvertibleError",
    "NotAppreciableError",
    "NegativeArgumentError",
    "NotRepresentableError",
    "LengthMismatchError",
    "EmptyVectorError",
    "ParseError",
    "KindMismatchError",
    "ConsistencyError",
]


class DualQuatError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteError(DualQuatError, ValueError):
    """A component is (or an operation produced) NaN or an infinity."""


class NotInvertibleError(DualQuatError, ArithmeticError):
    """Inverse requested for a value whose standard part is zero."""


class NotAppreciableError(DualQuatError, ArithmeticError):
    """Operation defined only for appreciable values got an infinitesimal one."""


class NegativeArgumentError(DualQuatError, ArithmeticError):
    """Square root requested for a value below zero in the total order."""


class NotRepresentableError(DualQuatError, ArithmeticError):
    """The exact result exists in no dual number (e.g. sqrt of a positive
    infinitesimal, whose square would need a nonzero epsilon-squared term)."""


class LengthMismatchError(DualQuatError, ValueError):
    """Vectors (or a basis) of incompatible lengths were combined."""


class EmptyVectorError(DualQuatError, ValueError):
    """A vector or basis with zero entries was constructed or parsed."""


class ParseError(DualQuatError, ValueError):
    """Malformed input text.  Carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class KindMismatchError(DualQuatError, ValueError):
    """A CLI command was given a document of the wrong kind."""


class ConsistencyError(DualQuatError, ArithmeticError):
    """An internal cross-check failed; indicates a bug, not bad input."""
