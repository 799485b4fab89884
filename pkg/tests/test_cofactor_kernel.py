import numpy as np
import pytest
from conftest import line_angle, rotation_about

from rotaxis import (
    SkewParams,
    eigvec_via_cofactors,
    extract_axis,
    random_rotation,
    random_rotations,
    rank2_kernel_rows,
    skew_matrix,
    symmetric_kernel_check,
    validate_orthogonal,
    vector_u,
)
from rotaxis.errors import RankDeficient

RZ90 = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])


def test_skew_matrix_zero_and_unit():
    assert np.array_equal(skew_matrix(SkewParams(0, 0, 0)), np.zeros((3, 3)))
    assert np.array_equal(
        skew_matrix(SkewParams(1, 0, 0)),
        np.array([[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]]),
    )


def test_skew_matrix_is_exactly_skew():
    rng = np.random.default_rng(14)
    for _ in range(50):
        q = skew_matrix(SkewParams(*rng.standard_normal(3)))
        assert np.array_equal(q + q.T, np.zeros((3, 3)))


def test_skew_matrix_annihilates_params_exactly():
    rng = np.random.default_rng(6)
    for _ in range(100):
        p, q, r = (float(x) for x in rng.standard_normal(3) * 10)
        m = skew_matrix(SkewParams(p, q, r)).tolist()
        # Unfused IEEE products cancel exactly (fl(q*r) appears with both
        # signs); BLAS matvecs may fuse and leave the rounding residual.
        for row in m:
            assert row[0] * p + row[1] * q + row[2] * r == 0.0
        blas = skew_matrix(SkewParams(p, q, r)) @ np.array([p, q, r])
        assert float(np.max(np.abs(blas))) <= 4e-16 * max(abs(p), abs(q), abs(r)) ** 2


def test_rank2_rows_of_shifted_rotation():
    rows = rank2_kernel_rows(RZ90 - np.eye(3))
    assert np.array_equal(rows[2], np.array([0.0, 0.0, 2.0]))
    for row in rows:
        # every row is a multiple of e3 (possibly zero)
        assert row[0] == 0.0 and row[1] == 0.0


def test_rank2_rows_diag110():
    rows = rank2_kernel_rows(np.diag([1.0, 1.0, 0.0]))
    assert np.array_equal(rows[0], np.zeros(3))
    assert np.array_equal(rows[1], np.zeros(3))
    assert np.array_equal(rows[2], np.array([0.0, 0.0, 1.0]))


def test_rank2_rows_full_rank_are_not_kernel_vectors():
    rows = rank2_kernel_rows(np.eye(3))
    assert np.array_equal(np.vstack(rows), np.eye(3))


def test_rank2_kernel_property_on_random_rank2():
    rng = np.random.default_rng(7)
    for _ in range(200):
        u = rng.standard_normal(3)
        v = rng.standard_normal(3)
        w = rng.standard_normal(3)
        x = rng.standard_normal(3)
        m = np.outer(u, v) + np.outer(w, x)
        norm = float(np.max(np.abs(m)))
        assert abs(np.linalg.det(m)) <= 1e-12 * max(1.0, norm**3)
        for row in rank2_kernel_rows(m):
            assert float(np.max(np.abs(m @ row))) <= 1e-10 * norm**2


def test_eigvec_via_cofactors_rz90():
    a = validate_orthogonal(RZ90)
    v = eigvec_via_cofactors(a, 1)
    assert np.allclose(np.abs(v), [0, 0, 1], atol=1e-15)


def test_eigvec_via_cofactors_identity_rank_deficient():
    with pytest.raises(RankDeficient):
        eigvec_via_cofactors(validate_orthogonal(np.eye(3)), 1)


def test_eigvec_via_cofactors_rejects_other_lambda():
    with pytest.raises(ValueError):
        eigvec_via_cofactors(validate_orthogonal(RZ90), 2.0)


def test_eigvec_parallel_to_auto_extraction():
    for a in random_rotations(8, 300):
        v = eigvec_via_cofactors(a, 1)
        assert line_angle(v, extract_axis(a).axis) <= 1e-9


def test_eigvec_for_minus_one_on_half_turns():
    rng = np.random.default_rng(9)
    for _ in range(100):
        n = rng.standard_normal(3)
        n /= np.linalg.norm(n)
        a = rotation_about(n, np.pi)  # trace -1, eigenvalues {1, -1, -1}
        # The -1 eigenspace has dimension 2, so A + I has rank 1 and every
        # cofactor row vanishes: the construction reports RankDeficient and
        # only the simple eigenvalue +1 yields a vector.
        with pytest.raises(RankDeficient):
            eigvec_via_cofactors(a, -1)
        v = eigvec_via_cofactors(a, 1)
        assert float(np.max(np.abs(a.m @ v - v))) <= 1e-9


def test_eigvec_minus_one_simple_for_reflective_branch():
    rng = np.random.default_rng(10)
    for _ in range(100):
        n = rng.standard_normal(3)
        n /= np.linalg.norm(n)
        r = rotation_about(n, float(rng.uniform(0.3, 2.8))).m
        a = validate_orthogonal(r @ (np.eye(3) - 2.0 * np.outer(n, n)))
        assert a.det_sign == -1
        v = eigvec_via_cofactors(a, -1)
        assert float(np.max(np.abs(a.m @ v + v))) <= 1e-9


def test_symmetric_kernel_check_rz90():
    u, residual = symmetric_kernel_check(validate_orthogonal(RZ90))
    assert np.array_equal(u, np.array([0.0, 0.0, -2.0]))
    assert residual == 0.0


def test_symmetric_kernel_check_symmetric_input():
    m = (np.full((3, 3), 2.0) - 3.0 * np.eye(3)) / 3.0
    u, residual = symmetric_kernel_check(validate_orthogonal(m))
    assert np.array_equal(u, np.zeros(3))
    assert residual == 0.0


def test_symmetric_kernel_check_haar():
    for a in random_rotations(12, 300):
        u, residual = symmetric_kernel_check(a)
        assert residual <= 1e-12 * max(1.0, float(np.max(np.abs(u))))


def test_unique_real_eigenvalue_clause():
    # For orthogonal A with exactly one real eigenvalue lambda = det sign
    # (det_sign * trace strictly inside (-1, 3)), any nonzero u in
    # ker(A - A^T) satisfies A u = lambda u.
    rng = np.random.default_rng(13)
    checked = 0
    for seed in range(400):
        a = random_rotation(seed)
        if rng.uniform() < 0.5:
            a = validate_orthogonal(-a.m)  # reflective branch
        s = a.det_sign
        t = s * a.trace
        if not (-1.0 + 1e-6 < t < 3.0 - 1e-6):
            continue
        u = vector_u(a)
        nu = float(np.max(np.abs(u)))
        if nu == 0.0:
            continue
        assert float(np.max(np.abs(a.m @ u - s * u))) <= 1e-10 * nu
        checked += 1
    assert checked > 300
