"""Closed-form rotation-axis vectors and the robust auto-selecting extractor.

For an orthogonal A = [a_ij] with det s, the fixed-axis direction (the
eigenvector with eigenvalue s) is available in closed form in several ways:

* ``vector_v``: componentwise reciprocals (1/(a23+a32), 1/(a13+a31),
  1/(a12+a21)) -- defined only when no pair sum vanishes;
* ``vector_u``: the skew differences (a23-a32, a31-a13, a12-a21) -- zero
  exactly when A is symmetric;
* ``vector_w(i)``: cofactor rows of A - I, e.g.
  W1 = (1+a11-a22-a33, a12+a21, a13+a31) -- at least one is nonzero for
  any rotation other than the identity.

``degenerate_axis`` covers the vanishing-pair-sum taxonomy that V misses,
and ``degenerate_family`` constructs the two-parameter family of matrices
with a vanishing pair sum.  ``extract_axis`` wraps everything into one
robust entry point.

Determinant -1 input is accepted throughout (except where noted): every
construction then yields the eigenvector with eigenvalue -1 = det(A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cofactor_kernel import eigvec_via_cofactors, skew_difference
from .errors import (
    DegenerateDenominator,
    IdentityInput,
    InfeasibleParameters,
    MethodInapplicable,
    NotDegenerate,
    RankDeficient,
    WrongDeterminant,
)
from .linalg_core import (
    DEFAULT_ORTHO_TOL,
    Mat3,
    OrthogonalMatrix,
    Vec3,
    validate_orthogonal,
)

# Pair-sum magnitudes below EPS_DEGENERATE count as "zero denominator":
# beyond that point the reciprocal form has lost >= 7 digits and the
# degenerate rule is the more accurate construction.
EPS_DEGENERATE = 1e-7
# |U|_inf at or below EPS_SYMMETRIC routes extraction to the W vectors
# (the angle-pi branch, where the skew part carries no signal).
EPS_SYMMETRIC = 1e-7
# Identity detection: 3 - det_sign*trace at or below EPS_IDENTITY.  Kept a
# decade below the supported minimum angle of 1e-6 (where 3 - trace is
# about 1e-12) so the smallest supported rotations are never misclassified.
EPS_IDENTITY = 1e-13

# 1-based (i, j) index pairs in the order of V's components.
_V_PAIRS = ((2, 3), (1, 3), (1, 2))
_ALL_PAIRS = ((1, 2), (1, 3), (2, 3))

AUTO = "AUTO"
METHOD_TAGS = (
    "V",
    "U",
    "W1",
    "W2",
    "W3",
    "DEGENERATE_PAIR",
    "DEGENERATE_COLUMN",
    "COFACTOR",
    "RESOLVENT",
)


@dataclass(frozen=True)
class EigenReport:
    """Result of an axis extraction.

    ``axis`` is unit length, oriented so the skew-part vector
    (a32-a23, a13-a31, a21-a12) has nonnegative dot product with it (the
    right-hand-rule direction); ties at zero dot product are broken by
    making the first sufficiently-nonzero component positive.  ``angle`` is
    in [0, pi]; for det -1 it is the angle of the rotatory part
    (arccos((trace+1)/2)).  ``eigenvalue`` equals det_sign and ``residual``
    is |A axis - eigenvalue*axis|_inf.
    """

    axis: Vec3
    angle: float
    eigenvalue: int
    method: str
    residual: float


@dataclass(frozen=True)
class DegenerateTag:
    """Which degenerate branch produced an axis.

    ``branch`` is "pair" (exactly one symmetric off-diagonal pair (i, j);
    the rule vector has v_k = 0) or "column" (two vanished pairs; column k
    is an eigenvector directly).  ``eigenvalue`` records the eigenvalue the
    returned vector certifies; in the column branch it is the diagonal
    entry a_kk and may differ from det_sign.
    """

    branch: str
    k: int
    eigenvalue: int
    i: int | None = None
    j: int | None = None


def pair_sums(m: Mat3) -> Vec3:
    """(a23+a32, a13+a31, a12+a21): the denominators of the V construction."""
    return np.array(
        [
            m[1, 2] + m[2, 1],
            m[0, 2] + m[2, 0],
            m[0, 1] + m[1, 0],
        ]
    )


def reciprocal_pair_sums(m: Mat3) -> Vec3:
    """Raw V on an arbitrary matrix; raises DegenerateDenominator."""
    sums = pair_sums(m)
    bad = tuple(
        pair for pair, s in zip(_V_PAIRS, sums) if abs(s) <= EPS_DEGENERATE
    )
    if bad:
        raise DegenerateDenominator(tuple(sorted(bad)))
    return 1.0 / sums


def vector_v(a: OrthogonalMatrix) -> Vec3:
    """The reciprocal-sum eigenvector (1/(a23+a32), 1/(a13+a31), 1/(a12+a21)).

    Satisfies A V = det_sign * V.  Raises DegenerateDenominator (listing the
    offending pairs) when any |a_ij + a_ji| <= EPS_DEGENERATE.
    """
    return reciprocal_pair_sums(a.m)


def vector_u(a: OrthogonalMatrix) -> Vec3:
    """The skew-difference eigenvector (a23-a32, a31-a13, a12-a21).

    Zero exactly when A = A^T; callers check the norm before use.
    """
    return skew_difference(a.m)


def vector_w(a: OrthogonalMatrix, i: int) -> Vec3:
    """The i-th cofactor-row eigenvector, i in {1, 2, 3}.

    W_i has (1 + a_ii) - (a_jj + a_kk) in slot i and the pair sums
    a_ij + a_ji in the other two slots.
    """
    if i not in (1, 2, 3):
        raise IndexError(f"W index must be in {{1, 2, 3}}, got {i}")
    m = a.m
    i0 = i - 1
    j0, k0 = [x for x in (0, 1, 2) if x != i0]
    w = np.empty(3)
    w[i0] = (1.0 + m[i0, i0]) - (m[j0, j0] + m[k0, k0])
    w[j0] = m[i0, j0] + m[j0, i0]
    w[k0] = m[i0, k0] + m[k0, i0]
    return w


def lemma3_residuals(a: OrthogonalMatrix) -> list[float]:
    """Nine |lhs - rhs| residuals of the three pair-sum identities.

    For each i in 1..3 (with j < k the remaining indices) a rotation
    satisfies

        (1 + a_ii)(a_jk + a_kj)  =  a_ij a_ki + a_ji a_ik
        (a_jj + a_kk)(a_jk + a_kj)  =  -(a_ij a_ik + a_ji a_ki)
        (a_ij^2 + a_ik^2)(a_ij a_ik + a_ji a_ki)
             =  (a_ij a_ki + a_ji a_ik)(a_ij a_ji + a_ik a_ki)

    Returned in order i = 1, 2, 3, three residuals each.  Requires det +1.
    """
    if a.det_sign != 1:
        raise WrongDeterminant("pair-sum identities hold for det +1 only")
    m = a.m
    out: list[float] = []
    for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        aii, ajj, akk = m[i, i], m[j, j], m[k, k]
        aij, aji = m[i, j], m[j, i]
        aik, aki = m[i, k], m[k, i]
        ajk, akj = m[j, k], m[k, j]
        out.append(abs((1.0 + aii) * (ajk + akj) - (aij * aki + aji * aik)))
        out.append(abs((ajj + akk) * (ajk + akj) + (aij * aik + aji * aki)))
        out.append(
            abs(
                (aij * aij + aik * aik) * (aij * aik + aji * aki)
                - (aij * aki + aji * aik) * (aij * aji + aik * aki)
            )
        )
    return out


def degenerate_axis(a: OrthogonalMatrix) -> tuple[Vec3, DegenerateTag]:
    """Eigenvector for a matrix with at least one vanishing pair sum.

    Two branches:

    * "pair": exactly one off-diagonal pair is symmetric with nonzero
      entries (a_ij = a_ji != 0).  With k the remaining index, the vector
      v_k = 0, v_i = a_kj, v_j = -a_ki satisfies A v = det_sign * v.
    * "column": at least two off-diagonal pairs vanish entirely; the column
      through their common index k is a_kk e_k, an eigenvector with
      eigenvalue a_kk (recorded in the tag -- for half-turn rotations this
      certifies -1 rather than det_sign).

    Raises NotDegenerate when every pair sum exceeds EPS_DEGENERATE.
    """
    m = a.m
    sums = {
        (i, j): m[i - 1, j - 1] + m[j - 1, i - 1] for i, j in _ALL_PAIRS
    }
    if all(abs(s) > EPS_DEGENERATE for s in sums.values()):
        raise NotDegenerate(
            "all pair sums exceed the degeneracy tolerance; use the regular "
            "constructions"
        )

    zero_pairs = [
        (i, j)
        for i, j in _ALL_PAIRS
        if max(abs(m[i - 1, j - 1]), abs(m[j - 1, i - 1])) <= EPS_DEGENERATE
    ]
    if len(zero_pairs) >= 2:
        if len(zero_pairs) == 3:
            # Diagonal matrix: pick the column whose entry matches det_sign.
            k = 1 + int(np.argmax(a.det_sign * np.diag(m)))
        else:
            (i1, j1), (i2, j2) = zero_pairs
            k = ({i1, j1} & {i2, j2}).pop()
        col = m[:, k - 1].copy()
        eig = 1 if m[k - 1, k - 1] > 0.0 else -1
        return col, DegenerateTag(branch="column", k=k, eigenvalue=eig)

    symmetric = [
        (i, j)
        for i, j in _ALL_PAIRS
        if abs(m[i - 1, j - 1] - m[j - 1, i - 1]) <= EPS_DEGENERATE
        and max(abs(m[i - 1, j - 1]), abs(m[j - 1, i - 1])) > EPS_DEGENERATE
    ]
    if not symmetric:
        # Orthogonality forces exactly one symmetric nonzero pair whenever a
        # pair sum vanishes and fewer than two pairs are entirely zero; only
        # inputs straddling the tolerance can land here.
        raise NotDegenerate(
            "degenerate structure is ambiguous at the working tolerance"
        )
    i, j = min(
        symmetric, key=lambda ij: abs(m[ij[0] - 1, ij[1] - 1] - m[ij[1] - 1, ij[0] - 1])
    )
    k = ({1, 2, 3} - {i, j}).pop()
    v = np.zeros(3)
    v[i - 1] = m[k - 1, j - 1]
    v[j - 1] = -m[k - 1, i - 1]
    return v, DegenerateTag(
        branch="pair", k=k, eigenvalue=a.det_sign, i=i, j=j
    )


@dataclass(frozen=True)
class DegenerateFamilyParams:
    """Parameters of the vanishing-pair-sum family.

    Free parameters: a, b (with |a| < 1), the sign eps of the third-row
    coupling, and branch = a - b + d in {+1, -1}.  The derived entries
    satisfy

        p^2 = (a-b)(a+d),  q^2 = (a-b)(-b+d),  r^2 = (a+d)(-b+d),

    all three products nonnegative on the feasible region, with c = eps*d.
    Use :meth:`solve` to build a consistent instance.
    """

    a: float
    b: float
    eps: int
    branch: int
    d: float
    p: float
    q: float
    r: float
    c: float

    @classmethod
    def solve(cls, a: float, b: float, eps: int = 1, branch: int = 1):
        if eps not in (1, -1) or branch not in (1, -1):
            raise ValueError("eps and branch must be +1 or -1")
        a = float(a)
        b = float(b)
        if not abs(a) < 1.0:
            raise InfeasibleParameters(f"|a| must be < 1, got a = {a}")
        d = branch - (a - b)
        f_ab = a - b
        f_ad = a + d
        f_bd = d - b
        p2, q2, r2 = f_ab * f_ad, f_ab * f_bd, f_ad * f_bd
        if min(p2, q2, r2) < 0.0:
            raise InfeasibleParameters(
                f"squares (p^2, q^2, r^2) = ({p2}, {q2}, {r2}) include a "
                "negative value"
            )
        p, q, r = math.sqrt(p2), math.sqrt(q2), math.sqrt(r2)
        if f_ab < 0.0 or f_ad < 0.0 or f_bd < 0.0:
            # All three factors nonpositive: one sign flip restores the
            # product constraints p*q = r*(a-b), r*p = q*(a+d), q*r = p*(d-b).
            p = -p
        return cls(a=a, b=b, eps=eps, branch=branch, d=d, p=p, q=q, r=r, c=eps * d)


def degenerate_family(
    params: DegenerateFamilyParams, tol: float = DEFAULT_ORTHO_TOL
) -> OrthogonalMatrix:
    """Assemble [[a, r, q], [-r, b, p], [eps*q, -eps*p, eps*d]] and validate.

    The output is orthogonal to rounding, has a vanishing (1, 2) pair sum,
    and |det| = 1 with det_sign recorded by validation.
    """
    s = params
    m = np.array(
        [
            [s.a, s.r, s.q],
            [-s.r, s.b, s.p],
            [s.eps * s.q, -s.eps * s.p, s.eps * s.d],
        ]
    )
    return validate_orthogonal(m, tol=tol)


def _skew_part_vector(m: Mat3) -> Vec3:
    """(a32-a23, a13-a31, a21-a12): the right-hand-rule orientation probe."""
    return np.array(
        [
            m[2, 1] - m[1, 2],
            m[0, 2] - m[2, 0],
            m[1, 0] - m[0, 1],
        ]
    )


def _canonical_sign(v: Vec3) -> Vec3:
    """Flip so the first component with |.| > 1e-13 is positive."""
    for x in v:
        if abs(x) > 1e-13:
            return -v if x < 0.0 else v
    return v


def _orient(m: Mat3, unit: Vec3) -> Vec3:
    d = _skew_part_vector(m)
    t = float(d @ unit)
    if abs(t) <= 1e-13:
        return _canonical_sign(unit)
    return -unit if t < 0.0 else unit


def rotation_angle(a: OrthogonalMatrix) -> float:
    """Angle in [0, pi] of the rotatory part, arccos((trace - det_sign)/2).

    Evaluated as atan2(|skew part|/2, (trace - det_sign)/2), which is the
    same quantity but conditioned like the angle itself at both endpoints
    (plain arccos loses half the digits near an angle of pi).
    """
    d = _skew_part_vector(a.m)
    y = 0.5 * math.sqrt(float(d @ d))
    x = (a.trace - a.det_sign) / 2.0
    return math.atan2(y, x)


def finalize_report(a: OrthogonalMatrix, direction: Vec3, method: str) -> EigenReport:
    """Normalize, orient, and package a raw axis direction."""
    n = float(np.linalg.norm(direction))
    if n == 0.0:
        raise MethodInapplicable(f"method {method} produced the zero vector")
    axis = _orient(a.m, direction / n) + 0.0  # + 0.0 clears negative zeros
    eig = a.det_sign
    residual = float(np.max(np.abs(a.m @ axis - eig * axis)))
    return EigenReport(
        axis=axis,
        angle=rotation_angle(a),
        eigenvalue=eig,
        method=method,
        residual=residual,
    )


def extract_axis(a: OrthogonalMatrix, method: str = AUTO) -> EigenReport:
    """Extract the unit axis (eigenvector of eigenvalue det_sign).

    AUTO strategy: work on the rotation part B = det_sign * A; use the skew
    differences U(B) when |U|_inf > EPS_SYMMETRIC, otherwise (the half-turn
    case) the W_i of B with i = argmax |(1 + b_ii) - (b_jj + b_kk)|, lowest
    index on ties.  AUTO never returns the reciprocal form V -- it is the
    worst-conditioned construction -- but ``method="v"`` forces it.

    Explicit methods: "v", "u", "w1", "w2", "w3", "cofactor", "degenerate".
    Forcing raises MethodInapplicable where that construction fails (and
    DegenerateDenominator for forced "v" on a vanishing pair sum).

    Raises IdentityInput when A is within EPS_IDENTITY of +-I, where the
    axis is not unique.
    """
    s = a.det_sign
    if 3.0 - s * a.trace <= EPS_IDENTITY:
        raise IdentityInput(
            "matrix is the identity (or its negative); every vector is fixed"
        )
    b = a.m if s == 1 else -a.m
    tag = method.upper() if isinstance(method, str) else method
    if tag == AUTO:
        u = skew_difference(b)
        if float(np.max(np.abs(u))) > EPS_SYMMETRIC:
            return finalize_report(a, u, "U")
        i = 1 + int(np.argmax([_w_diag(b, i0) for i0 in range(3)]))
        return finalize_report(a, _w_of(b, i), f"W{i}")
    if tag == "V":
        return finalize_report(a, reciprocal_pair_sums(a.m), "V")
    if tag == "U":
        u = skew_difference(b)
        if float(np.max(np.abs(u))) <= EPS_SYMMETRIC:
            raise MethodInapplicable(
                "matrix is symmetric within tolerance; U vanishes"
            )
        return finalize_report(a, u, "U")
    if tag in ("W1", "W2", "W3"):
        i = int(tag[1])
        w = _w_of(b, i)
        if float(np.max(np.abs(w))) <= EPS_SYMMETRIC:
            raise MethodInapplicable(f"W{i} vanishes for this matrix")
        return finalize_report(a, w, tag)
    if tag == "COFACTOR":
        try:
            v = eigvec_via_cofactors(a, s)
        except RankDeficient as exc:
            raise MethodInapplicable(str(exc)) from exc
        return finalize_report(a, v, "COFACTOR")
    if tag == "DEGENERATE":
        try:
            v, dtag = degenerate_axis(a)
        except NotDegenerate as exc:
            raise MethodInapplicable(str(exc)) from exc
        if dtag.eigenvalue != s:
            raise MethodInapplicable(
                "degenerate column certifies the other eigenvalue "
                f"({dtag.eigenvalue}, det sign is {s})"
            )
        return finalize_report(a, v, f"DEGENERATE_{dtag.branch.upper()}")
    raise ValueError(f"unknown method {method!r}")


def _w_diag(b: Mat3, i0: int) -> float:
    j0, k0 = [x for x in (0, 1, 2) if x != i0]
    return abs((1.0 + b[i0, i0]) - (b[j0, j0] + b[k0, k0]))


def _w_of(b: Mat3, i: int) -> Vec3:
    i0 = i - 1
    j0, k0 = [x for x in (0, 1, 2) if x != i0]
    w = np.empty(3)
    w[i0] = (1.0 + b[i0, i0]) - (b[j0, j0] + b[k0, k0])
    w[j0] = b[i0, j0] + b[j0, i0]
    w[k0] = b[i0, k0] + b[k0, i0]
    return w
