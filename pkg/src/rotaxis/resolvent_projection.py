"""Spectral projection onto the fixed axis of a rotation.

For A in SO(3), A != I, the eigenvalue 1 is simple with the other two
eigenvalues a conjugate pair on the unit circle.  The projection onto
ker(I - A) is available two ways:

* closed form: P = adj(I - A) / (3 - trace A), since (1-lambda)(1-conj
  lambda) = 3 - trace;
* numerically: the contour integral (1/2 pi i) * oint (zI - A)^{-1} dz over
  a circle separating 1 from the conjugate pair, discretized by the
  trapezoid rule (spectrally accurate for this periodic analytic integrand).

Columns of P are proportional to the W eigenvectors: P e_i is parallel to
W_i wherever W_i is nonzero.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import EigenvalueTooClose, IdentityInput, WrongDeterminant
from .linalg_core import Mat3, OrthogonalMatrix, adjugate, det3

# Treat 3 - trace at or below this as "A is the identity" (a pole of order
# > 1 at z = 1); the contour separation check below covers near-identity.
EPS_IDENTITY_POLE = 1e-15
MIN_SEPARATION = 1e-6
DEFAULT_NODES = 256


@dataclass(frozen=True)
class ProjectionReport:
    """Projection matrix onto the axis, with the complex eigenvalue used.

    ``p`` is real symmetric idempotent with unit trace; ``method`` records
    which construction produced it.  ``imag_residual`` is the max imaginary
    part discarded by the contour quadrature (0 for the closed form).
    """

    p: Mat3
    lam: complex
    method: str
    imag_residual: float = 0.0


def _guard(a: OrthogonalMatrix) -> float:
    if a.det_sign != 1:
        raise WrongDeterminant("projection defined for rotations only")
    gap = 3.0 - a.trace
    if gap <= EPS_IDENTITY_POLE:
        raise IdentityInput("z = 1 is not a simple pole for the identity")
    return gap


def complex_eigenvalue(a: OrthogonalMatrix) -> complex:
    """The eigenvalue e^{i theta} with theta = arccos((trace - 1)/2).

    Its conjugate is the third eigenvalue; |1 - lambda|^2 = 3 - trace.
    """
    _guard(a)
    theta = math.acos(min(1.0, max(-1.0, (a.trace - 1.0) / 2.0)))
    return complex(math.cos(theta), math.sin(theta))


def projection_adjugate(a: OrthogonalMatrix) -> ProjectionReport:
    """Closed-form projection P = adj(I - A) / (3 - trace A)."""
    gap = _guard(a)
    p = adjugate(np.eye(3) - a.m) / gap
    return ProjectionReport(p=p, lam=complex_eigenvalue(a), method="ADJUGATE")


def projection_contour(
    a: OrthogonalMatrix,
    n_points: int = DEFAULT_NODES,
    radius: float | None = None,
) -> ProjectionReport:
    """Trapezoid discretization of (1/2 pi i) oint (zI - A)^{-1} dz.

    The contour is the circle of given radius centered at 1; the default
    radius min(|1 - lambda|/2, 1/2) strictly separates 1 from the conjugate
    pair.  Each node solves the complex 3x3 system by the adjugate formula;
    nodes are summed in index order so reruns are bit-identical.

    Raises EigenvalueTooClose when |1 - lambda| < 1e-6 (no usable contour;
    fall back to projection_adjugate) and IdentityInput at the identity.
    """
    gap = _guard(a)
    if n_points < 16:
        raise ValueError("n_points must be at least 16")
    separation = math.sqrt(gap)  # |1 - lambda|
    if separation < MIN_SEPARATION:
        raise EigenvalueTooClose(
            f"|1 - lambda| = {separation:.3e} < {MIN_SEPARATION}"
        )
    r = min(0.5 * separation, 0.5) if radius is None else float(radius)
    if not 0.0 < r < separation:
        raise ValueError(
            f"radius must lie in (0, |1 - lambda|) = (0, {separation:.3e})"
        )
    mc = a.m.astype(complex)
    eye = np.eye(3, dtype=complex)
    acc = np.zeros((3, 3), dtype=complex)
    for j in range(n_points):
        w = cmath.exp(2j * math.pi * j / n_points)
        z = 1.0 + r * w
        m = z * eye - mc
        acc += w * (adjugate(m) / det3(m))
    total = (r / n_points) * acc
    return ProjectionReport(
        p=total.real.copy(),
        lam=complex_eigenvalue(a),
        method="CONTOUR",
        imag_residual=float(np.max(np.abs(total.imag))),
    )
