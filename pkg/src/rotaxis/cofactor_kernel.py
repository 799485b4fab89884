"""Kernel-based eigenvector constructions.

A skew-symmetric matrix annihilates its own parameter vector; the rows of
the cofactor matrix of any rank-2 matrix span its kernel.  Applying the
latter to A - lambda*I turns a known eigenvalue of an orthogonal matrix
into an explicit eigenvector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankDeficient
from .linalg_core import Mat3, OrthogonalMatrix, Vec3, cofactor_matrix

RANK_DEFICIENT_TOL = 1e-12


@dataclass(frozen=True)
class SkewParams:
    """Parameters (p, q, r) of a 3x3 skew-symmetric matrix."""

    p: float
    q: float
    r: float


def skew_matrix(s: SkewParams) -> Mat3:
    """[[0, -r, q], [r, 0, -p], [-q, p, 0]]; annihilates (p, q, r) exactly."""
    return np.array(
        [
            [0.0, -s.r, s.q],
            [s.r, 0.0, -s.p],
            [-s.q, s.p, 0.0],
        ]
    )


def skew_difference(m: Mat3) -> Vec3:
    """(a23 - a32, a31 - a13, a12 - a21): the kernel vector of m - m^T."""
    return np.array(
        [
            m[1, 2] - m[2, 1],
            m[2, 0] - m[0, 2],
            m[0, 1] - m[1, 0],
        ]
    )


def rank2_kernel_rows(m: Mat3) -> tuple[Vec3, Vec3, Vec3]:
    """The three rows of the cofactor matrix of ``m``.

    When m has rank 2 every row lies in ker(m) and at least one is nonzero;
    for full-rank input they are ordinary cofactor rows, not kernel vectors.
    """
    c = cofactor_matrix(m)
    return c[0].copy(), c[1].copy(), c[2].copy()


def eigvec_via_cofactors(a: OrthogonalMatrix, lam: float) -> Vec3:
    """Unit eigenvector of ``a`` for the known eigenvalue ``lam`` in {+1, -1}.

    Takes the max-norm cofactor row of a.m - lam*I (ties broken by lowest
    index).  Raises RankDeficient when every row vanishes, i.e. the
    lam-eigenspace has dimension >= 2 (A = I, or symmetric A with a double
    -1 eigenvalue).
    """
    if lam not in (1, -1, 1.0, -1.0):
        raise ValueError(f"lam must be +1 or -1, got {lam}")
    rows = cofactor_matrix(a.m - float(lam) * np.eye(3))
    norms = np.max(np.abs(rows), axis=1)
    best = int(np.argmax(norms))
    if norms[best] <= RANK_DEFICIENT_TOL:
        raise RankDeficient(
            f"all cofactor rows of A - ({lam})I vanish; eigenspace dim >= 2"
        )
    v = rows[best]
    return v / np.linalg.norm(v)


def symmetric_kernel_check(a: OrthogonalMatrix) -> tuple[Vec3, float]:
    """The skew-difference vector u of ``a`` and the residual |A^2 u - u|_inf.

    u lies in ker(A - A^T), hence A^2 u = u for any orthogonal A; the
    residual is rounding-level and returned for test harnesses.
    """
    u = skew_difference(a.m)
    residual = float(np.max(np.abs(a.m @ (a.m @ u) - u)))
    return u, residual
