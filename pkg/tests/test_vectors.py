"""Vector norms, the real embedding, inner products, and basis checks."""

import math
import random

import pytest

from dualquat import (
    DQVector,
    DualNumber,
    DualQuaternion,
    EmptyVectorError,
    LengthMismatchError,
    NotAppreciableError,
    Quaternion,
    basis_check,
    embed_real,
)

I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def dq(std=None, inf=None):
    return DualQuaternion(std or Quaternion(), inf or Quaternion())


def rand_quat(rng):
    return Quaternion(*(rng.uniform(-10, 10) for _ in range(4)))


def rand_vector(rng, n=None, infinitesimal_rate=0.3):
    n = n or rng.randint(1, 8)
    entries = []
    for _ in range(n):
        if rng.random() < infinitesimal_rate:
            entries.append(DualQuaternion(Quaternion(), rand_quat(rng)))
        else:
            entries.append(DualQuaternion(rand_quat(rng), rand_quat(rng)))
    return DQVector(tuple(entries))


def le_with_slack(a, b, slack=1e-12):
    if abs(a.std - b.std) > slack:
        return a.std < b.std
    return a.inf <= b.inf + slack


# -- construction -------------------------------------------------------------

def test_empty_vector_rejected():
    with pytest.raises(EmptyVectorError):
        DQVector(())


def test_entries_must_be_dual_quaternions():
    with pytest.raises(TypeError):
        DQVector((1.0,))


def test_from_quaternions():
    v = DQVector.from_quaternions((I, J))
    assert len(v) == 2
    assert v[0] == DualQuaternion.from_quaternion(I)
    assert v.inf_part() == (Quaternion(), Quaternion())


# -- embedding ----------------------------------------------------------------

def test_embed_real_order():
    assert embed_real((Quaternion(1, 2, 3, 4),)) == (1, 2, 3, 4)
    assert embed_real((Quaternion(1), I)) == (1, 0, 0, 0, 0, 1, 0, 0)


def test_embedding_isometry():
    values = (Quaternion(3), Quaternion(0, 4, 0, 0))
    assert math.hypot(*embed_real(values)) == 5.0
    v = DQVector.from_quaternions(values)
    assert v.norm2() == DualNumber(5, 0)


# -- inner products --------------------------------------------------------------

def test_inner_oracles():
    x = DQVector.from_quaternions((Quaternion(1), I))
    assert x.inner(x) == DualQuaternion.from_real(2.0)

    single_i = DQVector.from_quaternions((I,))
    single_j = DQVector.from_quaternions((J,))
    # conj(i) j = -(ij) = -k
    assert single_i.inner(single_j) == DualQuaternion.from_quaternion(-K)

    y = DQVector.from_quaternions((I, Quaternion(1)))
    assert x.inner(y) == DualQuaternion()


def test_inner_conjugate_symmetry():
    rng = random.Random(61)
    for _ in range(200):
        n = rng.randint(1, 6)
        x, y = rand_vector(rng, n), rand_vector(rng, n)
        lhs = x.inner(y).conjugate()
        rhs = y.inner(x)
        for a, b in zip(
            lhs.std.components() + lhs.inf.components(),
            rhs.std.components() + rhs.inf.components(),
        ):
            assert math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9)


def test_inner_length_mismatch():
    x = DQVector.from_quaternions((I,))
    y = DQVector.from_quaternions((I, J))
    with pytest.raises(LengthMismatchError):
        x.inner(y)
    with pytest.raises(LengthMismatchError):
        x + y


def test_quaternion_vector_cauchy_schwarz():
    # for zero-infinitesimal vectors the mixed inner sum is a real scalar
    rng = random.Random(67)
    for _ in range(300):
        n = rng.randint(1, 6)
        xq = tuple(rand_quat(rng) for _ in range(n))
        yq = tuple(rand_quat(rng) for _ in range(n))
        x, y = DQVector.from_quaternions(xq), DQVector.from_quaternions(yq)
        s = x.inner(y) + y.inner(x)
        assert s.inf.norm() == 0.0
        assert s.std.imaginary_magnitude() <= 1e-12
        dot = sum(a * b for a, b in zip(embed_real(xq), embed_real(yq)))
        assert math.isclose(s.std.w, 2 * dot, rel_tol=1e-12, abs_tol=1e-9)
        bound = 2 * math.hypot(*embed_real(xq)) * math.hypot(*embed_real(yq))
        assert s.std.w <= bound + 1e-9 * max(1.0, bound)


# -- norms -------------------------------------------------------------------------

def test_norm_oracles_real_pair():
    x = DQVector.from_quaternions((Quaternion(1), I))
    assert x.norm1() == DualNumber(2, 0)
    assert x.norm_inf() == DualNumber(1, 0)
    assert x.norm2() == DualNumber(math.sqrt(2), 0)


def test_norm_oracles_infinitesimal_pair():
    x = DQVector((dq(inf=I), dq(inf=J)))
    assert x.norm1() == DualNumber(0, 2)
    assert x.norm_inf() == DualNumber(0, 1)
    assert x.norm2() == DualNumber(0, math.sqrt(2))
    with pytest.raises(NotAppreciableError):
        x.norm2_closed_form()


def test_norm_oracles_three_four():
    x = DQVector.from_quaternions((Quaternion(3), 4 * I))
    assert x.norm1() == DualNumber(7, 0)
    assert x.norm_inf() == DualNumber(4, 0)
    assert x.norm_inf_index() == 1
    assert x.norm2() == DualNumber(5, 0)
    assert x.norm2_closed_form() == DualNumber(5, 0)


def test_norm2_mixed_oracle():
    # appreciable entry squares to 1 + 2e; infinitesimal entry contributes zero
    x = DQVector((dq(std=Quaternion(1), inf=Quaternion(1)), dq(inf=I)))
    assert x.norm2() == DualNumber(1, 1)
    assert x.norm2_closed_form() == DualNumber(1, 1)


def test_norm_inf_tie_takes_lowest_index():
    x = DQVector((dq(std=Quaternion(1), inf=I), dq(std=Quaternion(1))))
    assert x.norm_inf() == DualNumber(1, 0)  # mixed sum of entry 0 is 0
    assert x.norm_inf_index() == 0

    y = DQVector((dq(inf=3 * I), dq(inf=2 * J)))
    assert y.norm_inf() == DualNumber(0, 3)
    assert y.norm_inf_index() == 0


def test_norms_of_zero_vector():
    z = DQVector((dq(), dq(), dq()))
    assert z.norm1().is_zero and z.norm_inf().is_zero and z.norm2().is_zero


def test_norm_definiteness_random():
    rng = random.Random(71)
    zero = DualNumber()
    for _ in range(300):
        v = rand_vector(rng)
        assert v.norm1() > zero and v.norm_inf() > zero and v.norm2() > zero


def test_norm_homogeneity_strata():
    rng = random.Random(73)
    for index in range(400):
        x = rand_vector(rng)
        if index % 3 == 0:
            scalar = DualQuaternion(rand_quat(rng), rand_quat(rng))
        elif index % 3 == 1:
            scalar = DualQuaternion(Quaternion(), rand_quat(rng))
        else:
            raw = rand_quat(rng)
            if raw.norm() < 0.5:
                continue
            std = (1.0 / raw.norm()) * raw
            seed_inf = rand_quat(rng)
            scalar = DualQuaternion(std, seed_inf - std.dot(seed_inf) * std)
        factor = scalar.magnitude()
        scaled = scalar * x
        for norm in (DQVector.norm1, DQVector.norm_inf, DQVector.norm2):
            lhs, rhs = norm(scaled), factor * norm(x)
            scale = max(1.0, abs(lhs.std), abs(lhs.inf), abs(rhs.std), abs(rhs.inf))
            assert abs(lhs.std - rhs.std) <= 1e-9 * scale
            assert abs(lhs.inf - rhs.inf) <= 1e-9 * scale


def test_norm_triangle_including_parallel_std():
    rng = random.Random(79)
    for index in range(400):
        n = rng.randint(1, 6)
        x = rand_vector(rng, n)
        variant = index % 5
        if variant < 2:
            y = rand_vector(rng, n)
        elif variant == 2:
            y = DQVector(tuple(DualQuaternion(Quaternion(), rand_quat(rng)) for _ in range(n)))
        else:
            t = (0.5, 2.0)[variant - 3]
            y = DQVector(tuple(DualQuaternion(t * e.std, rand_quat(rng)) for e in x))
        total = x + y
        for norm in (DQVector.norm1, DQVector.norm_inf, DQVector.norm2):
            assert le_with_slack(norm(total), norm(x) + norm(y))


def test_norm_chain_random():
    rng = random.Random(83)
    for index in range(400):
        if index % 3 == 0:
            v = DQVector(tuple(DualQuaternion(Quaternion(), rand_quat(rng)) for _ in range(rng.randint(1, 6))))
        else:
            v = rand_vector(rng)
        assert le_with_slack(v.norm_inf(), v.norm2())
        assert le_with_slack(v.norm2(), v.norm1())


def test_norm2_closed_form_agreement_and_bound():
    rng = random.Random(89)
    for _ in range(300):
        v = rand_vector(rng)
        if not v.has_appreciable_entry:
            continue
        direct, closed = v.norm2(), v.norm2_closed_form()
        scale = max(1.0, abs(direct.std), abs(direct.inf))
        assert abs(direct.std - closed.std) <= 1e-9 * scale
        assert abs(direct.inf - closed.inf) <= 1e-9 * scale
        bound = DualNumber(
            math.hypot(*embed_real(v.std_part())),
            math.hypot(*embed_real(v.inf_part())),
        )
        assert le_with_slack(closed, bound)


# -- unit and basis checks ------------------------------------------------------------

def test_unit_vector_check_oracles():
    h = 1 / math.sqrt(2)
    x = DQVector.from_quaternions((Quaternion(h), h * I))
    verdict = x.unit_check(1e-9)
    assert verdict.passed
    assert verdict.gram_residual <= 1e-15 and verdict.norm_residual <= 1e-15

    unit_dq = DQVector((dq(std=Quaternion(1), inf=I),))
    assert unit_dq.unit_check(1e-9).passed

    assert not DQVector.from_quaternions((Quaternion(2),)).unit_check(1e-9).passed


def test_unit_check_rejects_negative_tolerance():
    with pytest.raises(ValueError):
        DQVector.from_quaternions((Quaternion(1),)).unit_check(-0.1)


def test_unit_iff_margin():
    # both residual routes agree with a wide margin on pass and fail instances
    rng = random.Random(97)
    for _ in range(100):
        raw = [rand_quat(rng) for _ in range(3)]
        scale = math.hypot(*embed_real(raw))
        if scale < 0.5:
            continue
        std = [(1.0 / scale) * q for q in raw]
        infs = [rand_quat(rng) for _ in range(3)]
        overlap = sum(s.dot(i) for s, i in zip(std, infs))
        unit = DQVector(tuple(DualQuaternion(s, i - overlap * s) for s, i in zip(std, infs)))
        good = unit.unit_check(1e-9)
        assert good.passed
        assert max(good.gram_residual, good.norm_residual) <= 1e-10  # 10x margin

        bad = DQVector(tuple(DualQuaternion(e.std, e.inf + 0.01 * e.std) for e in unit))
        verdict = bad.unit_check(1e-9)
        assert not verdict.passed
        assert max(verdict.gram_residual, verdict.norm_residual) >= 1e-8  # 10x margin


def test_orthonormal_basis_oracles():
    e1 = DQVector((dq(std=Quaternion(1)), dq()))
    e2 = DQVector((dq(), dq(std=Quaternion(1))))
    verdict = basis_check([e1, e2], 1e-9)
    assert verdict.passed
    assert all(r == 0.0 for row in verdict.residuals for r in row)

    repeated = basis_check([e1, e1], 1e-9)
    assert not repeated.passed
    assert repeated.residuals[0][1] == 1.0

    decorated = DQVector((dq(std=Quaternion(1), inf=I), dq()))
    assert basis_check([decorated, e2], 1e-9).passed


def test_basis_check_validates_shape():
    e1 = DQVector((dq(std=Quaternion(1)), dq()))
    short = DQVector((dq(std=Quaternion(1)),))
    with pytest.raises(LengthMismatchError):
        basis_check([e1, short], 1e-9)
    with pytest.raises(ValueError):
        basis_check([], 1e-9)
    with pytest.raises(ValueError):
        basis_check([e1, e1], -1.0)


def test_scalar_action_is_left_multiplication():
    x = DQVector.from_quaternions((J,))
    scaled = DualQuaternion(Quaternion(), I) * x
    # i j = k lands in the infinitesimal slot
    assert scaled[0] == DualQuaternion(Quaternion(), K)


def test_vector_iteration_and_negation():
    v = DQVector.from_quaternions((I, J))
    assert list(v) == [DualQuaternion.from_quaternion(I), DualQuaternion.from_quaternion(J)]
    assert (-v)[1] == DualQuaternion.from_quaternion(-J)
