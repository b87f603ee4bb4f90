"""Dual numbers, quaternions, dual quaternions, and dual quaternion vectors.

The value types live in :mod:`dualquat.dual`, :mod:`dualquat.quaternion`,
:mod:`dualquat.dualquaternion`, and :mod:`dualquat.vectors`; the ``dualq``
command line front end is :mod:`dualquat.cli`.
"""

from .dual import (
    EPSILON,
    DualInterval,
    DualNumber,
    NoRootReport,
    Ordering,
    no_root_witness,
    sgn,
)
from .dualquaternion import DualQuaternion, UnitCheck
from .errors import (
    ConsistencyError,
    DualQuatError,
    EmptyVectorError,
    KindMismatchError,
    LengthMismatchError,
    NegativeArgumentError,
    NonFiniteError,
    NotAppreciableError,
    NotInvertibleError,
    NotRepresentableError,
    ParseError,
)
from .quaternion import Quaternion, mixed_sum
from .vectors import BasisCheck, DQVector, VectorUnitCheck, basis_check, embed_real

__version__ = "0.1.0"

__all__ = [
    "DualNumber",
    "Ordering",
    "DualInterval",
    "NoRootReport",
    "EPSILON",
    "sgn",
    "no_root_witness",
    "Quaternion",
    "mixed_sum",
    "DualQuaternion",
    "UnitCheck",
    "DQVector",
    "VectorUnitCheck",
    "BasisCheck",
    "basis_check",
    "embed_real",
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
    "__version__",
]
