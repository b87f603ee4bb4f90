"""Dual quaternions: ``std + inf*e`` with quaternion parts and ``e*e == 0``.

The dual unit commutes with the quaternion units, so products expand the
same way as for dual numbers, with the noncommutative quaternion product
inside each part.  A dual quaternion is appreciable when its standard part
is nonzero (exact test); only appreciable values are invertible.

The magnitude of a dual quaternion is a dual *number*: for an appreciable
value it is ``|std| + (mixed_sum(std, inf) / (2 |std|)) e``, and for an
infinitesimal one it is ``|inf| e``.  ``magnitude_via_sqrt`` reaches the
appreciable case independently as ``sqrt(q * q.conjugate())`` and exists
mainly so the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dual import DualNumber
from .errors import ConsistencyError, NotAppreciableError, NotInvertibleError
from .quaternion import Quaternion, mixed_sum

__all__ = ["DualQuaternion", "UnitCheck"]

_REALNESS_GUARD = 1e-12


@dataclass(frozen=True, slots=True)
class DualQuaternion:
    std: Quaternion = Quaternion()
    inf: Quaternion = Quaternion()

    @classmethod
    def from_quaternion(cls, value: Quaternion) -> DualQuaternion:
        return cls(value, Quaternion())

    @classmethod
    def from_dual(cls, value: DualNumber) -> DualQuaternion:
        """Embed a dual number as a dual quaternion with real parts."""
        return cls(Quaternion(value.std), Quaternion(value.inf))

    @classmethod
    def from_real(cls, value: float) -> DualQuaternion:
        return cls(Quaternion(float(value)), Quaternion())

    @property
    def is_appreciable(self) -> bool:
        return not self.std.is_zero

    @property
    def is_zero(self) -> bool:
        return self.std.is_zero and self.inf.is_zero

    def __add__(self, other) -> DualQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return DualQuaternion(self.std + other.std, self.inf + other.inf)

    __radd__ = __add__

    def __neg__(self) -> DualQuaternion:
        return DualQuaternion(-self.std, -self.inf)

    def __sub__(self, other) -> DualQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> DualQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> DualQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # e*e kills the inf*inf term; order matters in each product.
        return DualQuaternion(
            self.std * other.std,
            self.inf * other.std + self.std * other.inf,
        )

    def __rmul__(self, other) -> DualQuaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def conjugate(self) -> DualQuaternion:
        return DualQuaternion(self.std.conjugate(), self.inf.conjugate())

    def inverse(self) -> DualQuaternion:
        """Two-sided inverse; exists exactly for appreciable values."""
        if not self.is_appreciable:
            raise NotInvertibleError("infinitesimal dual quaternions have no inverse")
        std_inv = self.std.inverse()
        return DualQuaternion(std_inv, -(std_inv * self.inf * std_inv))

    def magnitude(self) -> DualNumber:
        if self.is_appreciable:
            n = self.std.norm()
            return DualNumber(n, mixed_sum(self.std, self.inf) / (2.0 * n))
        return DualNumber(0.0, self.inf.norm())

    def magnitude_via_sqrt(self) -> DualNumber:
        """Magnitude computed as ``sqrt(q * q.conjugate())``.

        ``q * q.conjugate()`` is a real dual number whenever the identity
        algebra holds, so its quaternion parts are checked for vanishing
        imaginary components before taking the square root.  Only defined
        for appreciable values; the square root of an infinitesimal square
        magnitude is not representable.
        """
        if not self.is_appreciable:
            raise NotAppreciableError(
                "sqrt route to the magnitude needs an appreciable value"
            )
        product = self * self.conjugate()
        scale = max(1.0, (self.std.norm() + self.inf.norm()) ** 2)
        for part in (product.std, product.inf):
            if part.imaginary_magnitude() > _REALNESS_GUARD * scale:
                raise ConsistencyError(
                    f"q * q.conjugate() is not real: got {part} in {product}"
                )
        return DualNumber(product.std.w, product.inf.w).sqrt()

    def unit_check(self, tol: float = 1e-9) -> UnitCheck:
        """Test whether this is a unit dual quaternion.

        The characterization is exact in exact arithmetic: unit standard
        part and vanishing mixed sum.  Both residuals are reported and
        compared against ``tol``.
        """
        if tol < 0.0:
            raise ValueError("tolerance must be nonnegative")
        norm_residual = abs(self.std.norm() - 1.0)
        mixed_residual = abs(mixed_sum(self.std, self.inf))
        return UnitCheck(
            passed=norm_residual <= tol and mixed_residual <= tol,
            norm_residual=norm_residual,
            mixed_residual=mixed_residual,
        )

    def is_unit(self, tol: float = 1e-9) -> bool:
        return self.unit_check(tol).passed

    def __str__(self) -> str:
        return f"({self.std})+({self.inf})e"


@dataclass(frozen=True)
class UnitCheck:
    passed: bool
    norm_residual: float
    mixed_residual: float

    def __bool__(self) -> bool:
        return self.passed


def _coerce(value: object) -> DualQuaternion | None:
    if isinstance(value, DualQuaternion):
        return value
    if isinstance(value, Quaternion):
        return DualQuaternion.from_quaternion(value)
    if isinstance(value, DualNumber):
        return DualQuaternion.from_dual(value)
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, float)):
        return DualQuaternion.from_real(float(value))
    return None
