"""Randomized verification suites behind ``dualq selfcheck``.

Each suite draws instances from a seeded generator and checks one algebraic
fact: an identity is checked componentwise against a relative tolerance
with a small absolute floor, and an order relation is checked under the
total order with a slack of ``ORDER_SLACK`` on the component that decides
the comparison (standard parts within the slack count as tied and the
infinitesimal parts take over).  Residuals of exact-arithmetic identities
are tracked so the report shows the observed floating-point margins.

Everything is driven by one ``random.Random(seed)`` consumed in a fixed
suite order, so a run is fully determined by ``(seed, cases)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .dual import EPSILON, DualNumber, Ordering, no_root_witness
from .dualquaternion import DualQuaternion
from .quaternion import Quaternion, mixed_sum
from .vectors import DQVector, basis_check, embed_real

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_CASES",
    "ORDER_SLACK",
    "SuiteResult",
    "run_all",
    "le_defect",
]

DEFAULT_SEED = 2718281828
DEFAULT_CASES = 10000

ORDER_SLACK = 1e-12  # slack on the deciding component of an order check
EQ_TOL = 1e-12       # absolute tolerance for identities that are exact in reals
REL = 1e-9           # relative tolerance for products of computed quantities
ABS_FLOOR = 1e-12    # absolute floor under every relative comparison


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    failures: int
    worst_residual: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


class _Recorder:
    __slots__ = ("failures", "worst")

    def __init__(self):
        self.failures = 0
        self.worst = 0.0

    def check(self, ok: bool, residual: float | None = None):
        if residual is None:
            residual = 0.0 if ok else 1.0
        if residual > self.worst:
            self.worst = residual
        if not ok:
            self.failures += 1

    def result(self, name: str, cases: int) -> SuiteResult:
        return SuiteResult(name, cases, self.failures, self.worst)


# -- comparison helpers -----------------------------------------------------

def le_defect(a: DualNumber, b: DualNumber, slack: float = ORDER_SLACK) -> float:
    """How much ``a <= b`` fails by, 0.0 when it holds within the slack.

    Standard parts within ``slack`` count as tied; the comparison then
    falls to the infinitesimal parts with the same slack.
    """
    delta = a.std - b.std
    if abs(delta) > slack:
        return max(0.0, delta)
    return max(0.0, a.inf - b.inf - slack)


def _nonneg_defect(a: DualNumber, slack: float = ORDER_SLACK) -> float:
    """How much ``0 <= a`` fails by, for values that are exact squares.

    Exact algebra on dual numbers only produces a zero standard part
    exactly, so the infinitesimal part is consulted only then.  A tiny
    nonzero standard part is a rounding survivor of a quantity that is
    nonnegative in exact arithmetic (an even power or a square), and its
    infinitesimal part is unconstrained, so only the sign of the standard
    part is judged, with the usual slack.
    """
    if a.std != 0.0:
        return max(0.0, -a.std - slack)
    return max(0.0, -a.inf - slack)


def _close(a: float, b: float, rel: float = REL, floor: float = ABS_FLOOR) -> bool:
    return abs(a - b) <= max(floor, rel * max(abs(a), abs(b)))


def _dual_diff(a: DualNumber, b: DualNumber) -> float:
    return max(abs(a.std - b.std), abs(a.inf - b.inf))


def _dual_close(a: DualNumber, b: DualNumber, rel: float = REL) -> bool:
    return _close(a.std, b.std, rel) and _close(a.inf, b.inf, rel)


def _quat_diff(a: Quaternion, b: Quaternion) -> float:
    return max(abs(x - y) for x, y in zip(a.components(), b.components()))


def _quat_close(a: Quaternion, b: Quaternion, rel: float = REL) -> bool:
    return all(_close(x, y, rel) for x, y in zip(a.components(), b.components()))


def _dq_diff(a: DualQuaternion, b: DualQuaternion) -> float:
    return max(_quat_diff(a.std, b.std), _quat_diff(a.inf, b.inf))


def _dq_close(a: DualQuaternion, b: DualQuaternion, rel: float = REL) -> bool:
    return _quat_close(a.std, b.std, rel) and _quat_close(a.inf, b.inf, rel)


# -- generators --------------------------------------------------------------

def _real(rng: random.Random) -> float:
    return rng.uniform(-10.0, 10.0)


def _dual(rng: random.Random, zero_std_rate: float = 0.2) -> DualNumber:
    std = 0.0 if rng.random() < zero_std_rate else _real(rng)
    return DualNumber(std, _real(rng))


def _appreciable_dual(rng: random.Random) -> DualNumber:
    while True:
        q = _dual(rng, zero_std_rate=0.0)
        if q.is_appreciable:
            return q


def _quat(rng: random.Random) -> Quaternion:
    return Quaternion(_real(rng), _real(rng), _real(rng), _real(rng))


def _quat_nonzero(rng: random.Random) -> Quaternion:
    while True:
        q = _quat(rng)
        if not q.is_zero:
            return q


def _unit_quat(rng: random.Random) -> Quaternion:
    while True:
        q = _quat(rng)
        n = q.norm()
        if n >= 0.5:
            return (1.0 / n) * q


def _dquat(rng: random.Random, kind: str) -> DualQuaternion:
    # kind: "A" appreciable, "I" infinitesimal, "Z" zero
    if kind == "A":
        return DualQuaternion(_quat_nonzero(rng), _quat(rng))
    if kind == "I":
        return DualQuaternion(Quaternion(), _quat(rng))
    return DualQuaternion()


_PAIR_STRATA = (("A", "A"), ("A", "I"), ("I", "A"), ("I", "I"))


def _unit_dquat(rng: random.Random) -> DualQuaternion:
    std = _unit_quat(rng)
    raw = _quat(rng)
    # Remove the component of the infinitesimal part along the standard
    # part; that zeroes the mixed sum, which is the unit condition.
    inf = raw - std.dot(raw) * std
    return DualQuaternion(std, inf)


def _vector(rng: random.Random, length: int | None = None, profile: str = "general") -> DQVector:
    n = length if length is not None else rng.randint(1, 8)
    entries = []
    for _ in range(n):
        if profile == "infinitesimal":
            kind = "I"
        elif profile == "appreciable":
            kind = "A"
        else:
            kind = "A" if rng.random() < 0.7 else "I"
        entries.append(_dquat(rng, kind))
    return DQVector(tuple(entries))


def _vector_with_appreciable(rng: random.Random, length: int | None = None) -> DQVector:
    while True:
        v = _vector(rng, length, "general")
        if v.has_appreciable_entry:
            return v


def _unit_vector(rng: random.Random, n: int) -> DQVector:
    while True:
        raw = [_quat(rng) for _ in range(n)]
        scale = math.hypot(*embed_real(raw))
        if scale >= 0.5:
            break
    std = [(1.0 / scale) * q for q in raw]
    inf = [_quat(rng) for _ in range(n)]
    # Project the flattened infinitesimal part off the standard part so
    # the inner product of the vector with itself is exactly one.
    overlap = 0.0
    for s, i in zip(std, inf):
        overlap += s.dot(i)
    entries = tuple(
        DualQuaternion(s, i - overlap * s) for s, i in zip(std, inf)
    )
    return DQVector(entries)


# -- dual number suites -------------------------------------------------------

def _suite_dual_order_total(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        p, q, r = _dual(rng), _dual(rng), _dual(rng)
        if index % 5 == 0:
            q = DualNumber(p.std, q.inf)  # force a standard-part tie
        if index % 7 == 0:
            r = p  # force an equality
        rec.check((p < q) + (p == q) + (p > q) == 1)
        rec.check((p <= q) == (p < q or p == q))
        rec.check((p < q) == (q > p))
        lo, mid, hi = sorted([p, q, r])
        rec.check(lo <= mid and mid <= hi and lo <= hi)
        if p <= q and q <= p:
            rec.check(p == q)
    return rec.result("dual_order_total", cases)


def _suite_dual_even_power_nonneg(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        q = _dual(rng)
        k = 1 + index % 3
        defect = _nonneg_defect(q ** (2 * k))
        rec.check(defect == 0.0, defect)
    return rec.result("dual_even_power_nonneg", cases)


def _suite_dual_square_expansion_nonneg(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _dual(rng), _dual(rng)
        defect = _nonneg_defect(p**2 + q**2 - 2 * (p * q))
        rec.check(defect == 0.0, defect)
    return rec.result("dual_square_expansion_nonneg", cases)


def _suite_dual_product_of_nonnegatives(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = abs(_dual(rng)), abs(_dual(rng))
        defect = _nonneg_defect(p * q)
        rec.check(defect == 0.0, defect)
    return rec.result("dual_product_of_nonnegatives", cases)


def _suite_dual_product_of_positives(rng, cases):
    rec = _Recorder()
    zero = DualNumber()
    for index in range(cases):
        p = abs(_appreciable_dual(rng))  # appreciable and positive
        q = abs(_dual(rng, zero_std_rate=0.5))
        if q.is_zero:
            q = EPSILON
        if index % 2:
            p, q = q, p
        rec.check(p * q > zero)
    return rec.result("dual_product_of_positives", cases)


def _suite_dual_abs_zero_iff_zero(rng, cases):
    rec = _Recorder()
    zero = DualNumber()
    rec.check(abs(zero).is_zero)
    for _ in range(cases):
        q = _dual(rng)
        rec.check(abs(q).is_zero == q.is_zero)
    return rec.result("dual_abs_zero_iff_zero", cases)


def _suite_dual_abs_dominates(rng, cases):
    rec = _Recorder()
    zero = DualNumber()
    for _ in range(cases):
        q = _dual(rng)
        if q >= zero:
            rec.check(abs(q) == q)
        else:
            rec.check(abs(q) > q)
    return rec.result("dual_abs_dominates", cases)


def _suite_dual_abs_sqrt_of_square(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        q = _appreciable_dual(rng)
        diff = _dual_diff(abs(q), (q**2).sqrt())
        rec.check(diff <= EQ_TOL, diff)
    return rec.result("dual_abs_sqrt_of_square", cases)


def _suite_dual_abs_multiplicative(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _dual(rng), _dual(rng)
        lhs, rhs = abs(p * q), abs(p) * abs(q)
        rec.check(_dual_close(lhs, rhs), _dual_diff(lhs, rhs))
    return rec.result("dual_abs_multiplicative", cases)


def _suite_dual_triangle(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _dual(rng), _dual(rng)
        defect = le_defect(abs(p + q), abs(p) + abs(q))
        rec.check(defect == 0.0, defect)
    return rec.result("dual_triangle", cases)


def _suite_dual_inverse_roundtrip(rng, cases):
    rec = _Recorder()
    one = DualNumber(1.0)
    for _ in range(cases):
        while True:
            q = _appreciable_dual(rng)
            if abs(q.std) >= 1e-3:  # keep the roundtrip well conditioned
                break
        diff = _dual_diff(q * q.inverse(), one)
        rec.check(diff <= 1e-9, diff)
        back = q.inverse().inverse()
        rec.check(_dual_close(back, q), _dual_diff(back, q))
    return rec.result("dual_inverse_roundtrip", cases)


def _suite_dual_sqrt_roundtrip(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        q = abs(_appreciable_dual(rng))
        root = q.sqrt()
        rec.check(_dual_close(root * root, q), _dual_diff(root * root, q))
    return rec.result("dual_sqrt_roundtrip", cases)


def _suite_dual_pow_repeated_mul(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        q = _dual(rng)
        k = 2 + index % 4
        acc = q
        for _ in range(k - 1):
            acc = acc * q
        rec.check(_dual_close(q**k, acc), _dual_diff(q**k, acc))
    return rec.result("dual_pow_repeated_mul", cases)


def _suite_dual_no_root_witness(rng, cases):
    rec = _Recorder()
    report = no_root_witness()
    rec.check(report.value_at_zero == DualNumber(0.0, -1.0))
    rec.check(report.sign_at_zero is Ordering.LESS)
    rec.check(report.value_at_one == DualNumber(1.0, -1.0))
    rec.check(report.sign_at_one is Ordering.GREATER)
    rec.check(not report.root_exists)
    rec.check(report.interval.contains(DualNumber()) and report.interval.contains(DualNumber(1.0)))
    for _ in range(cases):
        x = DualNumber(rng.uniform(0.0, 1.0), _real(rng))
        rec.check(not (x * x - EPSILON).is_zero)
    return rec.result("dual_no_root_witness", cases)


# -- quaternion suites --------------------------------------------------------

def _suite_quat_conjugate_fixes_norm(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        q = _quat(rng)
        diff = abs(q.conjugate().norm() - q.norm())
        rec.check(diff <= EQ_TOL, diff)
    return rec.result("quat_conjugate_fixes_norm", cases)


def _suite_quat_self_product_is_norm_squared(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        q = _quat(rng)
        n2 = q.norm() ** 2
        for product in (q * q.conjugate(), q.conjugate() * q):
            resid = max(product.imaginary_magnitude(), abs(product.w - n2))
            rec.check(resid <= EQ_TOL, resid)
    return rec.result("quat_self_product_is_norm_squared", cases)


def _suite_quat_norm_zero_iff_zero(rng, cases):
    rec = _Recorder()
    rec.check(Quaternion().norm() == 0.0)
    for _ in range(cases):
        q = _quat(rng)
        rec.check((q.norm() == 0.0) == q.is_zero)
    return rec.result("quat_norm_zero_iff_zero", cases)


def _suite_quat_norm_triangle(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _quat(rng), _quat(rng)
        defect = max(0.0, (p + q).norm() - (p.norm() + q.norm()) - ORDER_SLACK)
        rec.check(defect == 0.0, defect)
    return rec.result("quat_norm_triangle", cases)


def _suite_quat_norm_multiplicative(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _quat(rng), _quat(rng)
        lhs, rhs = (p * q).norm(), p.norm() * q.norm()
        rec.check(_close(lhs, rhs), abs(lhs - rhs))
    return rec.result("quat_norm_multiplicative", cases)


def _suite_quat_conjugate_antihomomorphism(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _quat(rng), _quat(rng)
        diff = _quat_diff((p * q).conjugate(), q.conjugate() * p.conjugate())
        rec.check(diff <= EQ_TOL, diff)
    return rec.result("quat_conjugate_antihomomorphism", cases)


def _suite_quat_mixed_sum_forms(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q = _quat(rng), _quat(rng)
        two_dot = 2.0 * p.dot(q)
        left = p * q.conjugate() + q * p.conjugate()
        right = p.conjugate() * q + q.conjugate() * p
        resid = max(
            left.imaginary_magnitude(),
            right.imaginary_magnitude(),
            abs(left.w - two_dot),
            abs(right.w - two_dot),
        )
        rec.check(resid <= EQ_TOL, resid)
        rec.check(mixed_sum(p, q) == two_dot)
    return rec.result("quat_mixed_sum_forms", cases)


def _suite_quat_product_associative(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        p, q, r = _quat(rng), _quat(rng), _quat(rng)
        lhs, rhs = (p * q) * r, p * (q * r)
        rec.check(_quat_close(lhs, rhs), _quat_diff(lhs, rhs))
    return rec.result("quat_product_associative", cases)


def _suite_quat_inverse_roundtrip(rng, cases):
    rec = _Recorder()
    one = Quaternion(1.0)
    for _ in range(cases):
        while True:
            q = _quat(rng)
            if q.norm() >= 0.5:
                break
        for product in (q * q.inverse(), q.inverse() * q):
            diff = _quat_diff(product, one)
            rec.check(diff <= EQ_TOL, diff)
    return rec.result("quat_inverse_roundtrip", cases)


def _suite_quat_noncommutativity_witness(rng, cases):
    rec = _Recorder()
    i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    rec.check(i * j == k)
    rec.check(j * i == -k)
    rec.check(i * j != j * i)
    rec.check(j * k == i and k * j == -i)
    rec.check(k * i == j and i * k == -j)
    rec.check(i * i == Quaternion(-1) and j * j == Quaternion(-1) and k * k == Quaternion(-1))
    rec.check((i * j) * k == Quaternion(-1))
    return rec.result("quat_noncommutativity_witness", 1)


# -- dual quaternion suites ----------------------------------------------------

def _suite_dq_self_conjugate_product_commutes(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        q = _dquat(rng, "AI"[index % 2])
        diff = _dq_diff(q * q.conjugate(), q.conjugate() * q)
        rec.check(diff <= EQ_TOL, diff)
    return rec.result("dq_self_conjugate_product_commutes", cases)


def _suite_dq_conjugate_fixes_magnitude(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        q = _dquat(rng, "AI"[index % 2])
        diff = _dual_diff(q.magnitude(), q.conjugate().magnitude())
        rec.check(diff <= EQ_TOL, diff)
    return rec.result("dq_conjugate_fixes_magnitude", cases)


def _suite_dq_magnitude_nonneg_definite(rng, cases):
    rec = _Recorder()
    zero = DualNumber()
    rec.check(DualQuaternion().magnitude().is_zero)
    for index in range(cases):
        q = _dquat(rng, "AI"[index % 2])
        if q.is_zero:
            rec.check(q.magnitude().is_zero)
        else:
            rec.check(q.magnitude() > zero)
    return rec.result("dq_magnitude_nonneg_definite", cases)


def _suite_dq_magnitude_multiplicative(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        kinds = _PAIR_STRATA[index % 4]
        p, q = _dquat(rng, kinds[0]), _dquat(rng, kinds[1])
        lhs, rhs = (p * q).magnitude(), p.magnitude() * q.magnitude()
        rec.check(_dual_close(lhs, rhs), _dual_diff(lhs, rhs))
    return rec.result("dq_magnitude_multiplicative", cases)


def _suite_dq_magnitude_triangle(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        kinds = _PAIR_STRATA[index % 4]
        p, q = _dquat(rng, kinds[0]), _dquat(rng, kinds[1])
        defect = le_defect((p + q).magnitude(), p.magnitude() + q.magnitude())
        rec.check(defect == 0.0, defect)
    return rec.result("dq_magnitude_triangle", cases)


def _suite_dq_sqrt_route_agrees(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        q = _dquat(rng, "A")
        diff = _dual_diff(q.magnitude_via_sqrt(), q.magnitude())
        rec.check(diff <= EQ_TOL, diff)
    return rec.result("dq_sqrt_route_agrees", cases)


def _suite_dq_inverse_roundtrip(rng, cases):
    rec = _Recorder()
    one = DualQuaternion.from_real(1.0)
    for _ in range(cases):
        # Standard part of norm 1..10 keeps the inverse well conditioned.
        std = rng.uniform(1.0, 10.0) * _unit_quat(rng)
        q = DualQuaternion(std, _quat(rng))
        for product in (q * q.inverse(), q.inverse() * q):
            diff = _dq_diff(product, one)
            rec.check(diff <= 1e-9, diff)
        back = q.inverse().inverse()
        rec.check(_dq_close(back, q), _dq_diff(back, q))
    return rec.result("dq_inverse_roundtrip", cases)


def _suite_dq_embedding_consistent(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        d1, d2 = _dual(rng), _dual(rng)
        q = _quat(rng)
        lifted = DualQuaternion.from_dual(d1)
        rec.check(_dual_diff(lifted.magnitude(), abs(d1)) <= EQ_TOL)
        product_diff = _dq_diff(
            lifted * DualQuaternion.from_dual(d2),
            DualQuaternion.from_dual(d1 * d2),
        )
        rec.check(product_diff <= EQ_TOL, product_diff)
        rec.check(DualQuaternion.from_quaternion(q).magnitude() == DualNumber(q.norm()))
    return rec.result("dq_embedding_consistent", cases)


# -- vector suites --------------------------------------------------------------

def _suite_vec_embedding_isometry(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        quats = tuple(_quat(rng) for _ in range(rng.randint(1, 8)))
        vector = DQVector.from_quaternions(quats)
        norm = vector.norm2()
        resid = max(abs(norm.std - math.hypot(*embed_real(quats))), abs(norm.inf))
        rec.check(resid <= EQ_TOL, resid)
    return rec.result("vec_embedding_isometry", cases)


def _suite_vec_inner_conjugate_symmetry(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        n = rng.randint(1, 8)
        x, y = _vector(rng, n), _vector(rng, n)
        lhs, rhs = x.inner(y).conjugate(), y.inner(x)
        rec.check(_dq_close(lhs, rhs), _dq_diff(lhs, rhs))
    return rec.result("vec_inner_conjugate_symmetry", cases)


def _suite_vec_norms_definite(rng, cases):
    rec = _Recorder()
    zero = DualNumber()
    for index in range(cases):
        profile = ("general", "infinitesimal", "zero")[index % 3]
        n = rng.randint(1, 8)
        if profile == "zero":
            v = DQVector(tuple(DualQuaternion() for _ in range(n)))
            rec.check(v.norm1().is_zero and v.norm_inf().is_zero and v.norm2().is_zero)
            continue
        v = _vector(rng, n, profile)
        if all(e.is_zero for e in v):
            continue
        rec.check(v.norm1() > zero)
        rec.check(v.norm_inf() > zero)
        rec.check(v.norm2() > zero)
    return rec.result("vec_norms_definite", cases)


def _suite_vec_norms_homogeneous(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        x = _vector(rng)
        stratum = index % 5
        if stratum == 0:
            scalar = _dquat(rng, "A")
        elif stratum == 1:
            scalar = _dquat(rng, "I")
        elif stratum == 2:
            scalar = _unit_dquat(rng)
        elif stratum == 3:
            scalar = DualQuaternion.from_dual(_dual(rng))
        else:
            scalar = DualQuaternion.from_real(_real(rng))
        scaled = scalar * x
        factor = scalar.magnitude()
        for norm in (DQVector.norm1, DQVector.norm_inf, DQVector.norm2):
            lhs, rhs = norm(scaled), factor * norm(x)
            rec.check(_dual_close(lhs, rhs), _dual_diff(lhs, rhs))
    return rec.result("vec_norms_homogeneous", cases)


def _suite_vec_norms_triangle(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        variant = index % 6
        n = rng.randint(1, 8)
        if variant == 0:
            x, y = _vector(rng, n), _vector(rng, n)
        elif variant == 1:
            # both sides infinitesimal
            x = _vector(rng, n, "infinitesimal")
            y = _vector(rng, n, "infinitesimal")
        elif variant == 2:
            # one side infinitesimal
            x = _vector(rng, n)
            y = _vector(rng, n, "infinitesimal")
        else:
            # proportional standard parts, the near-equality case
            t = (0.5, 1.0, 2.0)[variant - 3]
            x = _vector_with_appreciable(rng, n)
            y = DQVector(tuple(DualQuaternion(t * e.std, _quat(rng)) for e in x))
        total = x + y
        for norm in (DQVector.norm1, DQVector.norm_inf, DQVector.norm2):
            defect = le_defect(norm(total), norm(x) + norm(y))
            rec.check(defect == 0.0, defect)
    return rec.result("vec_norms_triangle", cases)


def _suite_vec_norm_chain(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        profile = ("general", "infinitesimal", "appreciable")[index % 3]
        v = _vector(rng, None, profile)
        n1, n2, ninf = v.norm1(), v.norm2(), v.norm_inf()
        low = le_defect(ninf, n2)
        high = le_defect(n2, n1)
        rec.check(low == 0.0, low)
        rec.check(high == 0.0, high)
    return rec.result("vec_norm_chain", cases)


def _suite_vec_norm2_closed_form(rng, cases):
    rec = _Recorder()
    for _ in range(cases):
        v = _vector_with_appreciable(rng)
        direct, closed = v.norm2(), v.norm2_closed_form()
        rec.check(_dual_close(direct, closed), _dual_diff(direct, closed))
        bound = DualNumber(
            math.hypot(*embed_real(v.std_part())),
            math.hypot(*embed_real(v.inf_part())),
        )
        defect = le_defect(closed, bound)
        rec.check(defect == 0.0, defect)
    return rec.result("vec_norm2_closed_form", cases)


def _suite_vec_unit_checks(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        u = _unit_vector(rng, rng.randint(1, 8))
        verdict = u.unit_check(1e-9)
        rec.check(verdict.passed, max(verdict.gram_residual, verdict.norm_residual))
        if index % 2 == 0:
            # scale defect in the standard part
            bad = DQVector((1.5 * u.entries[0],) + u.entries[1:])
        else:
            # mixed-sum defect in the infinitesimal part
            bad = DQVector(tuple(DualQuaternion(e.std, e.inf + 0.01 * e.std) for e in u))
        rec.check(not bad.unit_check(1e-9).passed)
    return rec.result("vec_unit_checks", cases)


def _suite_vec_orthonormal_basis(rng, cases):
    rec = _Recorder()
    for index in range(cases):
        n = rng.randint(1, 4)
        positions = rng.sample(range(n), n)
        vectors = []
        for row in range(n):
            entries = [DualQuaternion() for _ in range(n)]
            if index % 2 == 0:
                entries[positions[row]] = DualQuaternion.from_quaternion(_unit_quat(rng))
            else:
                entries[positions[row]] = _unit_dquat(rng)
            vectors.append(DQVector(tuple(entries)))
        verdict = basis_check(vectors, 1e-9)
        rec.check(verdict.passed, max(max(row) for row in verdict.residuals))
        bad = [1.01 * vectors[0]] + vectors[1:]
        rec.check(not basis_check(bad, 1e-9).passed)
    return rec.result("vec_orthonormal_basis", cases)


# -- registry ---------------------------------------------------------------

_SUITES: tuple[tuple[str, Callable], ...] = (
    ("dual_order_total", _suite_dual_order_total),
    ("dual_even_power_nonneg", _suite_dual_even_power_nonneg),
    ("dual_square_expansion_nonneg", _suite_dual_square_expansion_nonneg),
    ("dual_product_of_nonnegatives", _suite_dual_product_of_nonnegatives),
    ("dual_product_of_positives", _suite_dual_product_of_positives),
    ("dual_abs_zero_iff_zero", _suite_dual_abs_zero_iff_zero),
    ("dual_abs_dominates", _suite_dual_abs_dominates),
    ("dual_abs_sqrt_of_square", _suite_dual_abs_sqrt_of_square),
    ("dual_abs_multiplicative", _suite_dual_abs_multiplicative),
    ("dual_triangle", _suite_dual_triangle),
    ("dual_inverse_roundtrip", _suite_dual_inverse_roundtrip),
    ("dual_sqrt_roundtrip", _suite_dual_sqrt_roundtrip),
    ("dual_pow_repeated_mul", _suite_dual_pow_repeated_mul),
    ("dual_no_root_witness", _suite_dual_no_root_witness),
    ("quat_conjugate_fixes_norm", _suite_quat_conjugate_fixes_norm),
    ("quat_self_product_is_norm_squared", _suite_quat_self_product_is_norm_squared),
    ("quat_norm_zero_iff_zero", _suite_quat_norm_zero_iff_zero),
    ("quat_norm_triangle", _suite_quat_norm_triangle),
    ("quat_norm_multiplicative", _suite_quat_norm_multiplicative),
    ("quat_conjugate_antihomomorphism", _suite_quat_conjugate_antihomomorphism),
    ("quat_mixed_sum_forms", _suite_quat_mixed_sum_forms),
    ("quat_product_associative", _suite_quat_product_associative),
    ("quat_inverse_roundtrip", _suite_quat_inverse_roundtrip),
    ("quat_noncommutativity_witness", _suite_quat_noncommutativity_witness),
    ("dq_self_conjugate_product_commutes", _suite_dq_self_conjugate_product_commutes),
    ("dq_conjugate_fixes_magnitude", _suite_dq_conjugate_fixes_magnitude),
    ("dq_magnitude_nonneg_definite", _suite_dq_magnitude_nonneg_definite),
    ("dq_magnitude_multiplicative", _suite_dq_magnitude_multiplicative),
    ("dq_magnitude_triangle", _suite_dq_magnitude_triangle),
    ("dq_sqrt_route_agrees", _suite_dq_sqrt_route_agrees),
    ("dq_inverse_roundtrip", _suite_dq_inverse_roundtrip),
    ("dq_embedding_consistent", _suite_dq_embedding_consistent),
    ("vec_embedding_isometry", _suite_vec_embedding_isometry),
    ("vec_inner_conjugate_symmetry", _suite_vec_inner_conjugate_symmetry),
    ("vec_norms_definite", _suite_vec_norms_definite),
    ("vec_norms_homogeneous", _suite_vec_norms_homogeneous),
    ("vec_norms_triangle", _suite_vec_norms_triangle),
    ("vec_norm_chain", _suite_vec_norm_chain),
    ("vec_norm2_closed_form", _suite_vec_norm2_closed_form),
    ("vec_unit_checks", _suite_vec_unit_checks),
    ("vec_orthonormal_basis", _suite_vec_orthonormal_basis),
)


def suite_names() -> tuple[str, ...]:
    return tuple(name for name, _ in _SUITES)


def run_all(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> list[SuiteResult]:
    """Run every suite with one shared generator; fully deterministic."""
    if cases < 1:
        raise ValueError("cases must be at least 1")
    rng = random.Random(seed)
    results = []
    for name, suite in _SUITES:
        result = suite(rng, cases)
        if result.name != name:
            raise AssertionError(f"suite {name} reported as {result.name}")
        results.append(result)
    return results
