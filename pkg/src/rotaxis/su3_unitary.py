"""Eigenvectors of special unitary 3x3 matrices via cofactor rows.

For A in SU(3) the adjugate equals the conjugate transpose, so each
cofactor A_ij equals conj(a_ij) and the cofactor rows of A - lambda*I have
the closed form

    W_i[i] = conj(a_ii) + lambda^2 - lambda (a_jj + a_kk)
    W_i[j] = conj(a_ij) + lambda a_ji           (j != i)

satisfying A W_i = lambda W_i for any eigenvalue lambda.  A widely-quoted
variant of these rows drops the lambda factor and the conjugations on the
off-diagonal entries (and perturbs two diagonal signs);
``su3_paper_form_discrepancy`` measures how badly that literal variant
fails, rather than silently correcting it.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import NotAnEigenvalue, NotUnitary, ZeroVector
from .linalg_core import as_mat3

CMat3 = np.ndarray
CVec3 = np.ndarray

DEFAULT_UNITARY_TOL = 1e-9
EIGENVALUE_MATCH_TOL = 1e-8
ZERO_ROW_TOL = 1e-12


@dataclass(frozen=True)
class UnitaryMatrix:
    """A validated 3x3 matrix with m* m = I and det m = 1."""

    m: CMat3
    unitarity_residual: float
    det: complex

    @property
    def trace(self) -> complex:
        return complex(self.m[0, 0] + self.m[1, 1] + self.m[2, 2])


def validate_unitary(m, tol: float = DEFAULT_UNITARY_TOL) -> UnitaryMatrix:
    """Wrap ``m`` as UnitaryMatrix or raise NotUnitary.

    Checks max|m* m - I| <= tol and |det - 1| <= tol (det exactly 1, not
    just unit modulus).
    """
    mat = as_mat3(m, dtype=complex).copy()
    residual = float(np.max(np.abs(mat.conj().T @ mat - np.eye(3))))
    if not residual <= tol:
        raise NotUnitary(residual, tol)
    det = _det3c(mat)
    if abs(det - 1.0) > tol:
        raise NotUnitary(abs(det - 1.0), tol)
    mat.setflags(write=False)
    return UnitaryMatrix(m=mat, unitarity_residual=residual, det=det)


def _det3c(m: CMat3) -> complex:
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = m.tolist()
    return (
        a11 * (a22 * a33 - a23 * a32)
        - a12 * (a21 * a33 - a23 * a31)
        + a13 * (a21 * a32 - a22 * a31)
    )


def char_poly(a: UnitaryMatrix, z: complex) -> complex:
    """z^3 - t z^2 + conj(t) z - 1 with t = trace; zero at eigenvalues."""
    t = a.trace
    return ((z - t) * z + t.conjugate()) * z - 1.0


def su3_eigenvalues(a: UnitaryMatrix) -> tuple[complex, complex, complex]:
    """The three unit-modulus eigenvalues, product 1.

    Roots of z^3 - t z^2 + conj(t) z - 1 by Cardano with one Newton polish
    step per root (a general eigensolver is not warranted at 3x3 scale).
    Sorted by phase in (-pi, pi].
    """
    t = a.trace
    roots = _cubic_roots(-t, t.conjugate(), complex(-1.0))
    polished = []
    for z in roots:
        dp = (3.0 * z - 2.0 * t) * z + t.conjugate()
        if abs(dp) > 1e-8:
            z = z - char_poly(a, z) / dp
        polished.append(z)
    polished.sort(key=lambda z: (cmath.phase(z), z.real, z.imag))
    return tuple(polished)


def _cubic_roots(a2: complex, a1: complex, a0: complex) -> list[complex]:
    """Roots of z^3 + a2 z^2 + a1 z + a0 over the complex numbers."""
    shift = a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = a0 - a2 * a1 / 3.0 + 2.0 * a2**3 / 27.0
    disc = cmath.sqrt(q * q / 4.0 + p**3 / 27.0)
    u3 = -q / 2.0 + disc
    if abs(u3) < abs(-q / 2.0 - disc):
        u3 = -q / 2.0 - disc
    if abs(u3) < 1e-300:
        # p and q both ~0: triple root of the depressed cubic.
        return [cmath.exp(2j * cmath.pi * k / 3) * (-q) ** (1.0 / 3.0) - shift
                if abs(q) > 0.0 else -shift
                for k in range(3)]
    u = u3 ** (1.0 / 3.0)
    omega = complex(-0.5, 0.8660254037844386)
    out = []
    for k in range(3):
        uk = u * omega**k
        out.append(uk - p / (3.0 * uk) - shift)
    return out


def su3_w(a: UnitaryMatrix, lam: complex, i: int) -> CVec3:
    """Cofactor row i of (A - lam I): an eigenvector with A W = lam W.

    ``lam`` must lie within 1e-8 of an eigenvalue (NotAnEigenvalue
    otherwise); ``i`` is 1-based.  Raises ZeroVector when the row vanishes,
    which happens exactly when ``lam`` is not simple.
    """
    if i not in (1, 2, 3):
        raise IndexError(f"W index must be in {{1, 2, 3}}, got {i}")
    lam = complex(lam)
    if min(abs(lam - z) for z in su3_eigenvalues(a)) > EIGENVALUE_MATCH_TOL:
        raise NotAnEigenvalue(f"{lam!r} is not within 1e-8 of an eigenvalue")
    m = a.m
    i0 = i - 1
    j0, k0 = [x for x in (0, 1, 2) if x != i0]
    w = np.empty(3, dtype=complex)
    w[i0] = (m[i0, i0].conjugate() + lam * lam) - lam * (m[j0, j0] + m[k0, k0])
    w[j0] = m[i0, j0].conjugate() + lam * m[j0, i0]
    w[k0] = m[i0, k0].conjugate() + lam * m[k0, i0]
    if float(np.max(np.abs(w))) <= ZERO_ROW_TOL:
        raise ZeroVector(f"cofactor row {i} vanishes; {lam!r} is not simple")
    return w


def _literal_variant_rows(m: CMat3, lam: complex) -> list[CVec3]:
    """The literal variant rows: off-diagonals without lambda factors or
    full conjugation, and the (a11 - a33) / (a11 - a22) diagonals."""
    l2 = lam * lam
    w1 = np.array(
        [
            m[0, 0].conjugate() + l2 - lam * (m[1, 1] + m[2, 2]),
            m[0, 1].conjugate() + m[1, 0],
            m[0, 2].conjugate() + m[2, 0],
        ]
    )
    w2 = np.array(
        [
            m[0, 1] + m[1, 0],
            m[1, 1].conjugate() + l2 - lam * (m[0, 0] - m[2, 2]),
            m[1, 2] + m[2, 1],
        ]
    )
    w3 = np.array(
        [
            m[0, 2] + m[2, 0],
            m[1, 2] + m[2, 1],
            m[2, 2].conjugate() + l2 - lam * (m[0, 0] - m[1, 1]),
        ]
    )
    return [w1, w2, w3]


def su3_paper_form_discrepancy(a: UnitaryMatrix, lam: complex) -> float:
    """Max relative eigen-residual of the literal variant rows.

    Returns max_i |A w_i - lam w_i|_inf / |w_i|_inf over the rows with
    nonnegligible norm (0.0 if all vanish).  Measured, never corrected:
    large values document that the literal variant is not an eigenvector
    construction for generic lam.
    """
    lam = complex(lam)
    if min(abs(lam - z) for z in su3_eigenvalues(a)) > EIGENVALUE_MATCH_TOL:
        raise NotAnEigenvalue(f"{lam!r} is not within 1e-8 of an eigenvalue")
    worst = 0.0
    for w in _literal_variant_rows(a.m, lam):
        scale = float(np.max(np.abs(w)))
        if scale <= ZERO_ROW_TOL:
            continue
        res = float(np.max(np.abs(a.m @ w - lam * w)))
        worst = max(worst, res / scale)
    return worst
