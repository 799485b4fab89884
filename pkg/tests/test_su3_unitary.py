import cmath

import numpy as np
import pytest
from conftest import haar_su3, line_angle

from rotaxis import (
    random_rotations,
    su3_eigenvalues,
    su3_paper_form_discrepancy,
    su3_w,
    validate_unitary,
    vector_w,
)
from rotaxis.errors import NotAnEigenvalue, NotUnitary, ZeroVector
from rotaxis.linalg_core import cofactor_matrix
from rotaxis.su3_unitary import char_poly


def diag_su3(phi: float):
    return validate_unitary(np.diag([cmath.exp(1j * phi), cmath.exp(-1j * phi), 1.0]))


def null_space_oracle(m, lam):
    """Independent eigenvector via SVD null space of A - lam I."""
    _, s, vh = np.linalg.svd(m - lam * np.eye(3))
    return vh[-1].conj()


def complex_line_angle(u, v) -> float:
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    # distance between complex lines: sqrt(1 - |<u,v>|^2)
    c = abs(np.vdot(u, v))
    return float(np.sqrt(max(0.0, 1.0 - c * c)))


def test_validate_unitary_accepts_rotations_and_su3():
    for a in random_rotations(70, 20):
        u = validate_unitary(a.m.astype(complex))
        assert u.unitarity_residual <= 1e-12
        assert abs(u.det - 1.0) <= 1e-12


def test_validate_unitary_rejections():
    with pytest.raises(NotUnitary):
        validate_unitary(2.0 * np.eye(3, dtype=complex))
    # unitary but det != 1
    with pytest.raises(NotUnitary):
        validate_unitary(np.diag([cmath.exp(0.3j), 1.0, 1.0]))


def test_su3_eigenvalues_identity_triple_root():
    lams = su3_eigenvalues(validate_unitary(np.eye(3, dtype=complex)))
    for lam in lams:
        assert abs(lam - 1.0) <= 1e-9


def test_su3_eigenvalues_diag_example():
    a = diag_su3(0.7)
    lams = su3_eigenvalues(a)
    expected = sorted(
        [cmath.exp(0.7j), cmath.exp(-0.7j), 1.0 + 0j], key=lambda z: cmath.phase(z)
    )
    for got, want in zip(lams, expected):
        assert abs(got - want) <= 1e-12


def test_su3_eigenvalues_properties_haar():
    rng = np.random.default_rng(71)
    for _ in range(200):
        a = validate_unitary(haar_su3(rng))
        lams = su3_eigenvalues(a)
        prod = lams[0] * lams[1] * lams[2]
        assert abs(prod - 1.0) <= 1e-9
        for lam in lams:
            assert abs(abs(lam) - 1.0) <= 1e-9
            assert abs(char_poly(a, lam)) <= 1e-9
        # cross-check against LAPACK
        ref = sorted(np.linalg.eigvals(a.m), key=lambda z: cmath.phase(z))
        for got, want in zip(lams, ref):
            assert abs(got - complex(want)) <= 1e-8


def test_su3_w_diag_example():
    a = diag_su3(0.7)
    w3 = su3_w(a, 1.0, 3)
    # cofactor row by hand: ((e^{i phi}-1)(e^{-i phi}-1), 0, 0) pattern on
    # the diagonal slot; off-diagonal slots vanish
    assert abs(w3[0]) <= 1e-15 and abs(w3[1]) <= 1e-15
    expected = 2.0 - 2.0 * np.cos(0.7)
    assert w3[2] == pytest.approx(expected, abs=1e-12)


def test_su3_w_identity_zero_vector():
    with pytest.raises(ZeroVector):
        su3_w(validate_unitary(np.eye(3, dtype=complex)), 1.0, 1)


def test_su3_w_rejects_non_eigenvalue():
    with pytest.raises(NotAnEigenvalue):
        su3_w(diag_su3(0.7), 0.5 + 0.5j, 1)


def test_su3_w_matches_numeric_cofactor_rows():
    rng = np.random.default_rng(72)
    for _ in range(100):
        a = validate_unitary(haar_su3(rng))
        for lam in su3_eigenvalues(a):
            rows = cofactor_matrix(a.m - lam * np.eye(3))
            for i in (1, 2, 3):
                try:
                    w = su3_w(a, lam, i)
                except ZeroVector:
                    continue
                assert float(np.max(np.abs(w - rows[i - 1]))) <= 1e-10


def test_su3_w_eigen_residual_and_oracle():
    rng = np.random.default_rng(73)
    for _ in range(200):
        a = validate_unitary(haar_su3(rng))
        for lam in su3_eigenvalues(a):
            best = None
            for i in (1, 2, 3):
                try:
                    w = su3_w(a, lam, i)
                except ZeroVector:
                    continue
                scale = float(np.max(np.abs(w)))
                res = float(np.max(np.abs(a.m @ w - lam * w)))
                assert res <= 1e-8 * scale
                if best is None or scale > best[0]:
                    best = (scale, w)
            assert best is not None
            oracle = null_space_oracle(a.m, lam)
            assert complex_line_angle(best[1], oracle) <= 1e-7


def test_su3_w_rows_pairwise_proportional():
    rng = np.random.default_rng(74)
    for _ in range(100):
        a = validate_unitary(haar_su3(rng))
        lam = su3_eigenvalues(a)[0]
        ws = []
        for i in (1, 2, 3):
            try:
                ws.append(su3_w(a, lam, i))
            except ZeroVector:
                continue
        for x in range(len(ws)):
            for y in range(x + 1, len(ws)):
                u, v = ws[x], ws[y]
                scale = float(np.max(np.abs(u)) * np.max(np.abs(v)))
                for i in range(3):
                    for j in range(3):
                        assert abs(u[i] * v[j] - u[j] * v[i]) <= 1e-10 * max(
                            1.0, scale
                        )


def test_su3_cofactors_are_conjugates():
    rng = np.random.default_rng(75)
    for _ in range(200):
        a = validate_unitary(haar_su3(rng))
        assert float(np.max(np.abs(cofactor_matrix(a.m) - np.conj(a.m)))) <= 1e-10


def test_embedded_real_rotation_matches_vector_w_exactly():
    for a in random_rotations(76, 100):
        ua = validate_unitary(a.m.astype(complex))
        for i in (1, 2, 3):
            wr = vector_w(a, i)
            try:
                wc = su3_w(ua, 1.0 + 0j, i)
            except ZeroVector:
                assert float(np.max(np.abs(wr))) <= 1e-12
                continue
            assert np.array_equal(wc.real, wr)
            assert np.all(wc.imag == 0.0)


def test_literal_variant_discrepancy_large_for_complex_eigenvalues():
    rng = np.random.default_rng(77)
    values = []
    for _ in range(100):
        a = validate_unitary(haar_su3(rng))
        lams = su3_eigenvalues(a)
        lam = max(lams, key=lambda z: abs(z - 1.0))  # a generic lam != 1
        values.append(su3_paper_form_discrepancy(a, lam))
    values = np.array(values)
    # the literal variant fails decisively for generic eigenvalues
    assert float(np.min(values)) > 1e-3
    assert float(np.median(values)) > 1e-2


def test_literal_variant_w1_survives_at_lambda_one_on_real_input():
    # At lam = 1 on an embedded rotation the literal first row coincides
    # with the real construction, hence is a genuine eigenvector; the
    # literal second and third rows do not (their diagonals differ).
    from rotaxis.su3_unitary import _literal_variant_rows

    for a in random_rotations(78, 50):
        ua = validate_unitary(a.m.astype(complex))
        rows = _literal_variant_rows(ua.m, 1.0 + 0j)
        w1 = rows[0]
        if float(np.max(np.abs(w1))) > 1e-7:
            res = float(np.max(np.abs(ua.m @ w1 - w1)))
            assert res <= 1e-12 * max(1.0, float(np.max(np.abs(w1))))
        assert np.array_equal(w1.real, vector_w(a, 1))
