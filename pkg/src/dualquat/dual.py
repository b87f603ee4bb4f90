"""Dual numbers: values of the form ``std + inf*e`` where ``e*e == 0``.

The two float components are the standard part and the infinitesimal part.
A dual number is *appreciable* when its standard part is nonzero and
*infinitesimal* otherwise; both tests are exact, never tolerance-based.
Comparisons use the total order that ranks by standard part first and
breaks ties on the infinitesimal part, so every pair of values is ordered.

Arithmetic follows from ``e*e == 0``:

* ``(a + b e) + (c + d e) == (a + c) + (b + d) e``
* ``(a + b e) * (c + d e) == a c + (a d + b c) e``
* ``(a + b e) ** k        == a**k + k a**(k-1) b e``

Every operation returns a new value; nothing here mutates.  Components are
IEEE-754 doubles, and any operation whose result component would be NaN or
infinite raises :class:`~dualquat.errors.NonFiniteError` instead of letting
non-finite values poison the order relation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._common import finite
from .errors import (
    NegativeArgumentError,
    NotInvertibleError,
    NotRepresentableError,
)

__all__ = [
    "DualNumber",
    "Ordering",
    "DualInterval",
    "NoRootReport",
    "EPSILON",
    "sgn",
    "no_root_witness",
]


def sgn(value: float) -> float:
    """Sign of a real number: -1.0, 0.0, or 1.0."""
    if value > 0.0:
        return 1.0
    if value < 0.0:
        return -1.0
    return 0.0


class Ordering(enum.Enum):
    """Outcome of comparing two values under the total order."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, eq=False, slots=True)
class DualNumber:
    std: float = 0.0  # standard part
    inf: float = 0.0  # infinitesimal part (coefficient of e)

    def __post_init__(self):
        object.__setattr__(self, "std", finite(self.std, "standard part"))
        object.__setattr__(self, "inf", finite(self.inf, "infinitesimal part"))

    @property
    def is_appreciable(self) -> bool:
        return self.std != 0.0

    @property
    def is_infinitesimal(self) -> bool:
        return self.std == 0.0

    @property
    def is_zero(self) -> bool:
        return self.std == 0.0 and self.inf == 0.0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: DualNumber | float) -> DualNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualNumber(self.std + other.std, self.inf + other.inf)

    __radd__ = __add__

    def __neg__(self) -> DualNumber:
        return DualNumber(-self.std, -self.inf)

    def __sub__(self, other: DualNumber | float) -> DualNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: DualNumber | float) -> DualNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: DualNumber | float) -> DualNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # The e*e cross term vanishes.
        return DualNumber(
            self.std * other.std,
            self.std * other.inf + self.inf * other.std,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> DualNumber:
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 1:
            raise ValueError("exponent must be a positive integer")
        return DualNumber(
            self.std**exponent,
            exponent * self.std ** (exponent - 1) * self.inf,
        )

    def inverse(self) -> DualNumber:
        """Multiplicative inverse; defined only for appreciable values."""
        if self.std == 0.0:
            raise NotInvertibleError("infinitesimal dual numbers have no inverse")
        return DualNumber(1.0 / self.std, -self.inf / (self.std * self.std))

    def __truediv__(self, other: DualNumber | float) -> DualNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: DualNumber | float) -> DualNumber:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def sqrt(self) -> DualNumber:
        """Square root.

        Defined for appreciable positive values and for exact zero.  A
        positive infinitesimal has no square root among dual numbers (its
        square would need a nonzero e**2 coefficient), so that case raises
        NotRepresentableError; anything below zero in the total order
        raises NegativeArgumentError.
        """
        if self.std < 0.0 or (self.std == 0.0 and self.inf < 0.0):
            raise NegativeArgumentError("square root of a negative dual number")
        if self.std == 0.0:
            if self.inf == 0.0:
                return DualNumber(0.0, 0.0)
            raise NotRepresentableError(
                "a positive infinitesimal has no dual-number square root"
            )
        root = math.sqrt(self.std)
        return DualNumber(root, self.inf / (2.0 * root))

    def __abs__(self) -> DualNumber:
        # For an appreciable value the standard part fixes the sign of the
        # whole number; for an infinitesimal one only the inf part matters.
        if self.std != 0.0:
            return DualNumber(abs(self.std), sgn(self.std) * self.inf)
        return DualNumber(0.0, abs(self.inf))

    # -- order --------------------------------------------------------

    def compare(self, other: DualNumber | float) -> Ordering:
        """Total order: by standard part, ties broken by infinitesimal part."""
        coerced = _coerce(other)
        if coerced is None:
            raise TypeError(f"cannot compare DualNumber with {type(other).__name__}")
        mine, theirs = (self.std, self.inf), (coerced.std, coerced.inf)
        if mine < theirs:
            return Ordering.LESS
        if mine == theirs:
            return Ordering.EQUAL
        return Ordering.GREATER

    def __eq__(self, other: object) -> bool:
        coerced = _coerce(other)
        if coerced is None:
            return NotImplemented
        return self.std == coerced.std and self.inf == coerced.inf

    def __hash__(self) -> int:
        # Duals that equal a plain real must hash like that real.
        if self.inf == 0.0:
            return hash(self.std)
        return hash((self.std, self.inf))

    def __lt__(self, other: DualNumber | float) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.std, self.inf) < (other.std, other.inf)

    def __le__(self, other: DualNumber | float) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.std, self.inf) <= (other.std, other.inf)

    def __gt__(self, other: DualNumber | float) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.std, self.inf) > (other.std, other.inf)

    def __ge__(self, other: DualNumber | float) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.std, self.inf) >= (other.std, other.inf)

    def __str__(self) -> str:
        if self.inf < 0.0:
            return f"{self.std!r}-{-self.inf!r}e"
        return f"{self.std!r}+{self.inf!r}e"


def _coerce(value: object) -> DualNumber | None:
    if isinstance(value, DualNumber):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, float)):
        return DualNumber(float(value), 0.0)
    return None


EPSILON = DualNumber(0.0, 1.0)


@dataclass(frozen=True)
class DualInterval:
    """An interval of dual numbers under the total order.

    A missing bound means the interval is unbounded on that side; the
    corresponding ``*_closed`` flag is then ignored.  Membership is exact:
    no tolerances are applied at the endpoints.
    """

    lower: DualNumber | None = None
    upper: DualNumber | None = None
    lower_closed: bool = True
    upper_closed: bool = True

    def __post_init__(self):
        if self.lower is not None and self.upper is not None:
            if self.lower_closed and self.upper_closed:
                if self.lower > self.upper:
                    raise ValueError("closed interval needs lower <= upper")
            elif self.lower >= self.upper:
                raise ValueError("interval with an open end needs lower < upper")

    @classmethod
    def closed(cls, lower: DualNumber, upper: DualNumber) -> DualInterval:
        return cls(lower, upper, True, True)

    @classmethod
    def open(cls, lower: DualNumber, upper: DualNumber) -> DualInterval:
        return cls(lower, upper, False, False)

    @classmethod
    def closed_open(cls, lower: DualNumber, upper: DualNumber) -> DualInterval:
        return cls(lower, upper, True, False)

    @classmethod
    def open_closed(cls, lower: DualNumber, upper: DualNumber) -> DualInterval:
        return cls(lower, upper, False, True)

    @classmethod
    def at_least(cls, lower: DualNumber) -> DualInterval:
        return cls(lower, None, True, True)

    @classmethod
    def greater_than(cls, lower: DualNumber) -> DualInterval:
        return cls(lower, None, False, True)

    @classmethod
    def at_most(cls, upper: DualNumber) -> DualInterval:
        return cls(None, upper, True, True)

    @classmethod
    def less_than(cls, upper: DualNumber) -> DualInterval:
        return cls(None, upper, True, False)

    def contains(self, value: DualNumber | float) -> bool:
        candidate = _coerce(value)
        if candidate is None:
            raise TypeError("interval membership needs a DualNumber or real")
        if self.lower is not None:
            if self.lower_closed:
                if candidate < self.lower:
                    return False
            elif candidate <= self.lower:
                return False
        if self.upper is not None:
            if self.upper_closed:
                if candidate > self.upper:
                    return False
            elif candidate >= self.upper:
                return False
        return True

    def __contains__(self, value: DualNumber | float) -> bool:
        return self.contains(value)


@dataclass(frozen=True)
class NoRootReport:
    """Evidence that ``f(x) = x*x - e`` changes sign on [0, 1] without a root.

    ``f`` is negative at 0 and positive at 1, yet has no root anywhere: the
    intermediate value property fails for dual-valued polynomials.
    """

    value_at_zero: DualNumber
    sign_at_zero: Ordering
    value_at_one: DualNumber
    sign_at_one: Ordering
    interval: DualInterval
    root_exists: bool


def no_root_witness() -> NoRootReport:
    """Evaluate ``f(x) = x*x - e`` at the interval ends and solve for a root.

    A root would need both component equations to hold:

    * standard part:       ``x.std ** 2 == 0``
    * infinitesimal part:  ``2 * x.std * x.inf == 1``

    The first forces ``x.std == 0``, which zeroes the coefficient of
    ``x.inf`` in the second, leaving ``0 == 1``.  The report records the
    endpoint values, their signs, and the (non-)existence of a root.
    """

    def f(x: DualNumber) -> DualNumber:
        return x * x - EPSILON

    zero = DualNumber(0.0, 0.0)
    at_zero = f(zero)
    at_one = f(DualNumber(1.0, 0.0))
    forced_std = 0.0  # the only real whose square is zero
    inf_coefficient = 2.0 * forced_std
    # 'inf_coefficient * x.inf == 1' is solvable only for a nonzero coefficient.
    root_exists = inf_coefficient != 0.0
    return NoRootReport(
        value_at_zero=at_zero,
        sign_at_zero=at_zero.compare(zero),
        value_at_one=at_one,
        sign_at_one=at_one.compare(zero),
        interval=DualInterval.closed(zero, DualNumber(1.0, 0.0)),
        root_exists=root_exists,
    )
