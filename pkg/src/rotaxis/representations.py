"""Rotation parameterizations: quaternion, Cayley, exponential/axis-angle,
reflection pairs, and a seeded Haar sampler.

Conventions: quaternions are (a, b, c, d) with scalar part first; the unit
quaternion (cos(t/2), sin(t/2) n) maps to the rotation by t about the unit
axis n with the right-hand rule, as does exp_so3(AxisAngle(n, t)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .axis_formulas import extract_axis
from .cofactor_kernel import SkewParams, skew_matrix
from .errors import (
    IdentityInput,
    MinusOneEigenvalue,
    NotUnit,
    ParallelReflections,
    WrongDeterminant,
)
from .linalg_core import (
    Mat3,
    OrthogonalMatrix,
    Vec3,
    cross,
    validate_orthogonal,
)

EPS_CAYLEY = 1e-9
UNIT_TOL = 1e-12


@dataclass(frozen=True)
class Quaternion:
    """Quaternion a + b*i + c*j + d*k."""

    a: float
    b: float
    c: float
    d: float

    def norm(self) -> float:
        return math.sqrt(self.a**2 + self.b**2 + self.c**2 + self.d**2)

    def vector_part(self) -> Vec3:
        return np.array([self.b, self.c, self.d])


@dataclass(frozen=True)
class AxisAngle:
    """Unit rotation axis and angle in radians."""

    axis: Vec3
    angle: float


@dataclass(frozen=True)
class ReflectionPair:
    """Two unit reflection directions and their inner product c = <x, y>."""

    x: Vec3
    y: Vec3
    c: float

    @classmethod
    def of(cls, x, y) -> "ReflectionPair":
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        x = x / np.linalg.norm(x)
        y = y / np.linalg.norm(y)
        return cls(x=x, y=y, c=float(x @ y))


def quat_to_matrix(q: Quaternion, tol: float = 1e-9) -> OrthogonalMatrix:
    """Rotation matrix of the conjugation map w -> q w q^-1.

    Requires a unit quaternion (NotUnit otherwise).  The first column is
    (a^2+b^2-c^2-d^2, 2(bc+ad), 2(bd-ac)); the rest follows by cyclic
    symmetry.
    """
    if abs(q.norm() - 1.0) > UNIT_TOL:
        raise NotUnit(f"quaternion norm is {q.norm()!r}, expected 1")
    a, b, c, d = q.a, q.b, q.c, q.d
    m = np.array(
        [
            [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (a * c + b * d)],
            [2 * (b * c + a * d), a * a + c * c - b * b - d * d, 2 * (c * d - a * b)],
            [2 * (b * d - a * c), 2 * (a * b + c * d), a * a + d * d - b * b - c * c],
        ]
    )
    return validate_orthogonal(m, tol=tol)


def matrix_to_quat(a: OrthogonalMatrix) -> Quaternion:
    """Unit quaternion reproducing the rotation, scalar part >= 0.

    Branches on the largest of 1+trace, (1+a11)-(a22+a33), (1+a22)-(a11+a33),
    (1+a33)-(a11+a22) -- these are 4a^2, 4b^2, 4c^2, 4d^2 -- so the division
    is always by the largest component.  The sign tie at scalar part 0 is
    broken by making the first nonzero vector component positive.
    """
    if a.det_sign != 1:
        raise WrongDeterminant("only rotations have a quaternion square root")
    m = a.m
    (m11, m12, m13), (m21, m22, m23), (m31, m32, m33) = m.tolist()
    t0 = 1.0 + m11 + m22 + m33
    t1 = (1.0 + m11) - (m22 + m33)
    t2 = (1.0 + m22) - (m11 + m33)
    t3 = (1.0 + m33) - (m11 + m22)
    best = max(range(4), key=lambda i: (t0, t1, t2, t3)[i])
    if best == 0:
        qa = 0.5 * math.sqrt(t0)
        qb = (m32 - m23) / (4.0 * qa)
        qc = (m13 - m31) / (4.0 * qa)
        qd = (m21 - m12) / (4.0 * qa)
    elif best == 1:
        qb = 0.5 * math.sqrt(t1)
        qa = (m32 - m23) / (4.0 * qb)
        qc = (m12 + m21) / (4.0 * qb)
        qd = (m13 + m31) / (4.0 * qb)
    elif best == 2:
        qc = 0.5 * math.sqrt(t2)
        qa = (m13 - m31) / (4.0 * qc)
        qb = (m12 + m21) / (4.0 * qc)
        qd = (m23 + m32) / (4.0 * qc)
    else:
        qd = 0.5 * math.sqrt(t3)
        qa = (m21 - m12) / (4.0 * qd)
        qb = (m13 + m31) / (4.0 * qd)
        qc = (m23 + m32) / (4.0 * qd)
    if qa < -1e-13 or (
        abs(qa) <= 1e-13
        and next((x for x in (qb, qc, qd) if abs(x) > 1e-13), 1.0) < 0.0
    ):
        qa, qb, qc, qd = -qa, -qb, -qc, -qd
    return Quaternion(qa, qb, qc, qd)


def axis_angle_to_quat(aa: AxisAngle) -> Quaternion:
    """(cos(t/2), sin(t/2) n) for the unit axis n."""
    n = np.asarray(aa.axis, dtype=float)
    n = n / np.linalg.norm(n)
    h = 0.5 * aa.angle
    s = math.sin(h)
    return Quaternion(math.cos(h), s * n[0], s * n[1], s * n[2])


def exp_so3(aa: AxisAngle, tol: float = 1e-9) -> OrthogonalMatrix:
    """Rotation by ``aa.angle`` about ``aa.axis`` with the right-hand rule.

    Closed form R = I + sin(t) K + (1 - cos(t)) K^2 with K the skew matrix
    of the unit axis.  The axis is normalized before use.
    """
    n = np.asarray(aa.axis, dtype=float)
    norm = float(np.linalg.norm(n))
    if norm == 0.0:
        raise ValueError("axis must be nonzero")
    n = n / norm
    k = skew_matrix(SkewParams(n[0], n[1], n[2]))
    t = float(aa.angle)
    m = np.eye(3) + math.sin(t) * k + (1.0 - math.cos(t)) * (k @ k)
    return validate_orthogonal(m, tol=tol)


def log_so3(a: OrthogonalMatrix) -> AxisAngle:
    """Axis-angle of a rotation; angle in [0, pi], stable near pi.

    The identity maps to angle 0 about e1.  Raises WrongDeterminant on
    det -1 input.
    """
    if a.det_sign != 1:
        raise WrongDeterminant("logarithm defined for rotations only")
    try:
        report = extract_axis(a)
    except IdentityInput:
        return AxisAngle(axis=np.array([1.0, 0.0, 0.0]), angle=0.0)
    return AxisAngle(axis=report.axis, angle=report.angle)


def cayley_decompose(a: OrthogonalMatrix) -> SkewParams:
    """Skew parameters (p, q, r) with A = (I+Q)(I-Q)^{-1}, Q = skew(p, q, r).

    Defined when -1 is not an eigenvalue; raises MinusOneEigenvalue when
    trace <= -1 + EPS_CAYLEY.  Computed as Q = (A-I)(A+I)^{-1}.
    """
    if a.det_sign != 1:
        raise WrongDeterminant("Cayley parameters exist for rotations only")
    if a.trace <= -1.0 + EPS_CAYLEY:
        raise MinusOneEigenvalue(
            f"trace {a.trace!r} is within {EPS_CAYLEY} of -1"
        )
    eye = np.eye(3)
    # A - I and (A + I)^{-1} are both polynomials in A, hence commute: the
    # left solve equals the right product.
    q = np.linalg.solve(a.m + eye, a.m - eye)
    p_ = 0.5 * (q[2, 1] - q[1, 2])
    q_ = 0.5 * (q[0, 2] - q[2, 0])
    r_ = 0.5 * (q[1, 0] - q[0, 1])
    return SkewParams(p_, q_, r_)


def cayley_compose(s: SkewParams, tol: float = 1e-9) -> OrthogonalMatrix:
    """The rotation (I+Q)(I-Q)^{-1} in closed form.

    With D = 1 + p^2 + q^2 + r^2 the entries are polynomial over D; the
    output always has det +1 and fixes (p, q, r).
    """
    p, q, r = s.p, s.q, s.r
    den = 1.0 + p * p + q * q + r * r
    m = (
        np.array(
            [
                [1 + p * p - q * q - r * r, 2 * p * q - 2 * r, 2 * r * p + 2 * q],
                [2 * p * q + 2 * r, 1 - p * p + q * q - r * r, 2 * q * r - 2 * p],
                [2 * r * p - 2 * q, 2 * q * r + 2 * p, 1 - p * p - q * q + r * r],
            ]
        )
        / den
    )
    return validate_orthogonal(m, tol=tol)


def compose_reflections(
    pair: ReflectionPair, tol: float = 1e-9
) -> tuple[OrthogonalMatrix, Vec3]:
    """(I - 2 x x^T)(I - 2 y y^T) and its fixed axis cross(x, y).

    Raises ParallelReflections when x and y are parallel (the product is the
    identity and the cross product vanishes).
    """
    x = np.asarray(pair.x, dtype=float)
    y = np.asarray(pair.y, dtype=float)
    z = cross(x, y)
    if float(np.linalg.norm(z)) <= 1e-12:
        raise ParallelReflections("reflection directions are parallel")
    eye = np.eye(3)
    m = (eye - 2.0 * np.outer(x, x)) @ (eye - 2.0 * np.outer(y, y))
    return validate_orthogonal(m, tol=tol), z


def reflection_sum_identity_residual(pair: ReflectionPair) -> float:
    """Max over i != j of |(a_ij + a_ji) - rhs| for the pair-sum identity

        a_ij + a_ji = -4 x_i x_j - 4 y_i y_j + 4 c (x_i y_j + x_j y_i)

    where A is the two-reflection product.  Rounding-level for unit x, y.
    """
    x = np.asarray(pair.x, dtype=float)
    y = np.asarray(pair.y, dtype=float)
    c = float(pair.c)
    eye = np.eye(3)
    m = (eye - 2.0 * np.outer(x, x)) @ (eye - 2.0 * np.outer(y, y))
    worst = 0.0
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            lhs = m[i, j] + m[j, i]
            rhs = (
                -4.0 * x[i] * x[j]
                - 4.0 * y[i] * y[j]
                + 4.0 * c * (x[i] * y[j] + x[j] * y[i])
            )
            worst = max(worst, abs(lhs - rhs))
    return worst


def _haar_from_rng(rng: np.random.Generator) -> OrthogonalMatrix:
    while True:
        v = rng.standard_normal(4)
        n = float(np.linalg.norm(v))
        if n > 1e-6:
            break
    v = v / n
    return quat_to_matrix(Quaternion(v[0], v[1], v[2], v[3]))


def random_rotation(seed: int) -> OrthogonalMatrix:
    """Haar-distributed rotation, deterministic in ``seed``.

    Uses the Philox counter-based generator keyed with ``seed``: four
    standard normals normalized to a unit quaternion, then quat_to_matrix.
    """
    return _haar_from_rng(np.random.Generator(np.random.Philox(seed)))


def random_rotations(seed: int, count: int):
    """Yield ``count`` Haar rotations from one Philox stream keyed by seed."""
    rng = np.random.Generator(np.random.Philox(seed))
    for _ in range(count):
        yield _haar_from_rng(rng)
