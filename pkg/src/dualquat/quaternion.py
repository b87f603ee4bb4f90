"""Quaternions over IEEE-754 doubles, scalar component first.

Multiplication follows the usual rules ``i*i == j*j == k*k == -1``,
``i*j == k == -j*i``, ``j*k == i == -k*j``, ``k*i == j == -i*k``; it is
associative but not commutative.  Conjugation negates the imaginary
components and reverses products: ``(p * q).conjugate()`` equals
``q.conjugate() * p.conjugate()``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._common import finite
from .errors import ConsistencyError, NotInvertibleError

__all__ = ["Quaternion", "mixed_sum"]

# Imaginary residue allowed in products that are real in exact arithmetic,
# scaled by the operand magnitudes.  Exceeding it means a broken product,
# not floating-point noise.
_REALNESS_GUARD = 1e-12


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", finite(self.w, "w component"))
        object.__setattr__(self, "x", finite(self.x, "x component"))
        object.__setattr__(self, "y", finite(self.y, "y component"))
        object.__setattr__(self, "z", finite(self.z, "z component"))

    @property
    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def components(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def __add__(self, other: Quaternion | float) -> Quaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other: Quaternion | float) -> Quaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Quaternion | float) -> Quaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Quaternion | float) -> Quaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        return Quaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def __rmul__(self, other: Quaternion | float) -> Quaternion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def dot(self, other: Quaternion) -> float:
        """Componentwise dot product of the two 4-tuples."""
        return self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z

    def norm(self) -> float:
        return math.hypot(self.w, self.x, self.y, self.z)

    def norm_squared(self) -> float:
        return self.dot(self)

    def inverse(self) -> Quaternion:
        """Multiplicative inverse, ``conjugate / norm**2``."""
        if self.is_zero:
            raise NotInvertibleError("the zero quaternion has no inverse")
        n2 = self.norm_squared()
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def imaginary_magnitude(self) -> float:
        """Largest absolute imaginary component; zero iff the value is real."""
        return max(abs(self.x), abs(self.y), abs(self.z))

    def __str__(self) -> str:
        out = [repr(self.w)]
        for value, unit in ((self.x, "i"), (self.y, "j"), (self.z, "k")):
            sign = "-" if value < 0.0 else "+"
            out.append(f"{sign}{abs(value)!r}{unit}")
        return "".join(out)


def _coerce(value: object) -> Quaternion | None:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, float)):
        return Quaternion(float(value), 0.0, 0.0, 0.0)
    return None


def mixed_sum(p: Quaternion, q: Quaternion) -> float:
    """The real number ``p*q.conjugate() + q*p.conjugate()``.

    The value equals twice the componentwise dot product, which is what is
    returned; the symmetrized product form is evaluated as well and checked
    against it, so a defect in the product or conjugate cannot go unnoticed.
    """
    direct = 2.0 * p.dot(q)
    symmetric = p * q.conjugate() + q * p.conjugate()
    scale = max(1.0, p.norm() * q.norm())
    if symmetric.imaginary_magnitude() > _REALNESS_GUARD * scale:
        raise ConsistencyError(
            "mixed sum has a non-vanishing imaginary part: "
            f"{symmetric} from p={p}, q={q}"
        )
    if abs(symmetric.w - direct) > _REALNESS_GUARD * scale:
        raise ConsistencyError(
            f"mixed sum disagrees with its dot form: {symmetric.w!r} vs {direct!r}"
        )
    return direct
