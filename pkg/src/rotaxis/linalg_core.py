"""Exact 3x3 kernels: determinant, cofactors, adjugate, cross product, and
orthogonality validation.

All kernels are written entrywise (no pivoting, no factorization), so they
are branch-free closed forms and work unchanged for real and complex dtypes.
``Mat3`` / ``Vec3`` are plain numpy arrays of shape (3, 3) / (3,).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotOrthogonal, WrongDeterminant

Mat3 = np.ndarray
Vec3 = np.ndarray

DEFAULT_ORTHO_TOL = 1e-9

_I3 = np.eye(3)


def as_mat3(m, dtype=float) -> Mat3:
    """Coerce nested sequences / arrays to a 3x3 ndarray, validating shape."""
    out = np.asarray(m, dtype=dtype)
    if out.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {out.shape}")
    return out


def det3(m: Mat3) -> float:
    """Determinant by cofactor expansion along the first row."""
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = m.tolist()
    return (
        a11 * (a22 * a33 - a23 * a32)
        - a12 * (a21 * a33 - a23 * a31)
        + a13 * (a21 * a32 - a22 * a31)
    )


def cofactor(m: Mat3, i: int, j: int) -> float:
    """Signed 2x2 minor with row ``i`` and column ``j`` deleted.

    Indices are 1-based (``i, j in {1, 2, 3}``), matching the usual
    mathematical convention used throughout this package.
    """
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise IndexError(f"cofactor indices must be in {{1, 2, 3}}, got ({i}, {j})")
    rows = [r for r in (0, 1, 2) if r != i - 1]
    cols = [c for c in (0, 1, 2) if c != j - 1]
    minor = (
        m[rows[0], cols[0]] * m[rows[1], cols[1]]
        - m[rows[0], cols[1]] * m[rows[1], cols[0]]
    )
    sign = -1.0 if (i + j) % 2 else 1.0
    return sign * minor


def cofactor_matrix(m: Mat3) -> Mat3:
    """Matrix whose (i, j) entry is the (i, j) cofactor of ``m``."""
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = m.tolist()
    return np.array(
        [
            [
                a22 * a33 - a23 * a32,
                a23 * a31 - a21 * a33,
                a21 * a32 - a22 * a31,
            ],
            [
                a13 * a32 - a12 * a33,
                a11 * a33 - a13 * a31,
                a12 * a31 - a11 * a32,
            ],
            [
                a12 * a23 - a13 * a22,
                a13 * a21 - a11 * a23,
                a11 * a22 - a12 * a21,
            ],
        ]
    )


def adjugate(m: Mat3) -> Mat3:
    """Transpose of the cofactor matrix; satisfies m @ adj(m) = det(m) I."""
    return cofactor_matrix(m).T


def cross(u: Vec3, v: Vec3) -> Vec3:
    """Vector product, written out entrywise."""
    u1, u2, u3 = np.asarray(u).tolist()
    v1, v2, v3 = np.asarray(v).tolist()
    return np.array([u2 * v3 - u3 * v2, u3 * v1 - u1 * v3, u1 * v2 - u2 * v1])


@dataclass(frozen=True)
class OrthogonalMatrix:
    """A validated orthogonal 3x3 matrix.

    ``ortho_residual`` is the max-norm of m^T m - I measured at validation
    time; ``det_sign`` is +1 for rotations and -1 for the reflective branch.
    The stored array is read-only.
    """

    m: Mat3
    ortho_residual: float
    det_sign: int

    @property
    def trace(self) -> float:
        return float(self.m[0, 0] + self.m[1, 1] + self.m[2, 2])


def validate_orthogonal(m, tol: float = DEFAULT_ORTHO_TOL) -> OrthogonalMatrix:
    """Wrap ``m`` as an OrthogonalMatrix, or raise NotOrthogonal.

    The check is ``max|m^T m - I| <= tol``; the default tolerance admits
    matrices assembled from double-precision trig while rejecting anything
    grossly corrupted.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    mat = as_mat3(m, dtype=float).copy()
    residual = float(np.max(np.abs(mat.T @ mat - _I3)))
    if not residual <= tol:
        raise NotOrthogonal(residual, tol)
    det_sign = 1 if det3(mat) > 0.0 else -1
    mat.setflags(write=False)
    return OrthogonalMatrix(m=mat, ortho_residual=residual, det_sign=det_sign)


def cofactor_identity_residual(a: OrthogonalMatrix) -> Mat3:
    """Entrywise |cofactor(m, i, j) - m[i, j]| for a rotation.

    For det +1 orthogonal input every cofactor equals the matching entry, so
    all residual entries sit at rounding level.  Raises WrongDeterminant on
    det -1 input (there the cofactors equal the negated entries).
    """
    if a.det_sign != 1:
        raise WrongDeterminant("cofactor identity holds for det +1 only")
    return np.abs(cofactor_matrix(a.m) - a.m)


def laplace_cofactor_residual(m: Mat3) -> float:
    """Max residual of sum_k m[i,k] * cofactor(m)[j,k] = delta_ij * det(m).

    Valid for arbitrary (not necessarily orthogonal) input; returned for use
    by differential test harnesses.
    """
    mat = as_mat3(m, dtype=None if np.iscomplexobj(m) else float)
    r = mat @ cofactor_matrix(mat).T - det3(mat) * _I3
    return float(np.max(np.abs(r)))
