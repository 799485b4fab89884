"""The same eigenvector constructions over a prime field Z_p.

The defining conditions m^T m = I and det m = 1 are purely algebraic, so
the pair-sum eigenvector formulas carry over verbatim, now in exact modular
arithmetic: equalities hold exactly, no tolerances.  Only odd primes are
supported (the theory divides by 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DegenerateDenominatorFp,
    ModulusTooLarge,
    NotOnCircle,
    NotSpecialOrthogonalFp,
    ZeroDivisor,
)

CIRCLE_ENUMERATION_BOUND = 10**6


@lru_cache(maxsize=256)
def _is_odd_prime(p: int) -> bool:
    # Trial division with 6k +- 1 stepping; fine for the supported range.
    if p < 3 or p % 2 == 0:
        return False
    if p in (3, 5, 7):
        return True
    if p % 3 == 0:
        return False
    f = 5
    while f * f <= p:
        if p % f == 0 or p % (f + 2) == 0:
            return False
        f += 6
    return True


def _check_modulus(p: int) -> int:
    p = int(p)
    if p >= 1 << 61:
        raise ValueError(f"modulus {p} exceeds the supported bound 2^61")
    if not _is_odd_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    return p


@dataclass(frozen=True)
class FpScalar:
    """An element of Z_p, stored as its representative in [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        p = _check_modulus(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", int(self.value) % p)


@dataclass(frozen=True)
class FpVec3:
    """A 3-vector over Z_p."""

    entries: tuple[int, int, int]
    p: int

    def __post_init__(self):
        p = _check_modulus(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(
            self, "entries", tuple(int(x) % p for x in self.entries)
        )


@dataclass(frozen=True)
class FpMat3:
    """A 3x3 matrix over Z_p, row-major."""

    rows: tuple[tuple[int, int, int], ...]
    p: int

    def __post_init__(self):
        p = _check_modulus(self.p)
        rows = tuple(tuple(int(x) % p for x in row) for row in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("FpMat3 needs 3 rows of 3 entries")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", rows)


def fp_identity(p: int) -> FpMat3:
    return FpMat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), p)


def fp_inverse(x: FpScalar) -> FpScalar:
    """Multiplicative inverse mod p; raises ZeroDivisor on 0."""
    if x.value == 0:
        raise ZeroDivisor(f"0 has no inverse mod {x.p}")
    return FpScalar(pow(x.value, -1, x.p), x.p)


def _matmul(a, b, p):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) % p for j in range(3))
        for i in range(3)
    )


def _matvec(a, v, p):
    return tuple(sum(a[i][k] * v[k] for k in range(3)) % p for i in range(3))


def _det(rows, p):
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = rows
    return (
        a11 * (a22 * a33 - a23 * a32)
        - a12 * (a21 * a33 - a23 * a31)
        + a13 * (a21 * a32 - a22 * a31)
    ) % p


def _transpose(rows):
    return tuple(tuple(rows[j][i] for j in range(3)) for i in range(3))


def fp_multiply(m1: FpMat3, m2: FpMat3) -> FpMat3:
    if m1.p != m2.p:
        raise ValueError("moduli differ")
    return FpMat3(_matmul(m1.rows, m2.rows, m1.p), m1.p)


def fp_matvec(m: FpMat3, v: FpVec3) -> FpVec3:
    if m.p != v.p:
        raise ValueError("moduli differ")
    return FpVec3(_matvec(m.rows, v.entries, m.p), m.p)


def fp_det(m: FpMat3) -> int:
    return _det(m.rows, m.p)


def is_special_orthogonal_fp(m: FpMat3) -> bool:
    """True iff m^T m = I and det m = 1, all exact mod p."""
    p = m.p
    gram = _matmul(_transpose(m.rows), m.rows, p)
    if gram != fp_identity(p).rows:
        return False
    return _det(m.rows, p) == 1


def _require_so(m: FpMat3) -> None:
    if not is_special_orthogonal_fp(m):
        raise NotSpecialOrthogonalFp(
            f"matrix is not special orthogonal mod {m.p}"
        )


def _pair_sums(m: FpMat3):
    r = m.rows
    p = m.p
    # Same component order as the real V: pairs (2,3), (1,3), (1,2).
    return (
        (r[1][2] + r[2][1]) % p,
        (r[0][2] + r[2][0]) % p,
        (r[0][1] + r[1][0]) % p,
    )


def vector_v_fp(m: FpMat3) -> FpVec3:
    """Exact reciprocal-sum eigenvector; m V = V mod p.

    Raises DegenerateDenominatorFp (listing the 1-based pairs) when any
    a_ij + a_ji = 0 mod p.
    """
    _require_so(m)
    sums = _pair_sums(m)
    pairs = ((2, 3), (1, 3), (1, 2))
    bad = tuple(sorted(pair for pair, s in zip(pairs, sums) if s == 0))
    if bad:
        raise DegenerateDenominatorFp(bad)
    return FpVec3(tuple(pow(s, -1, m.p) for s in sums), m.p)


def vector_u_fp(m: FpMat3) -> FpVec3:
    """Exact skew-difference eigenvector (a23-a32, a31-a13, a12-a21)."""
    _require_so(m)
    r = m.rows
    return FpVec3(
        (r[1][2] - r[2][1], r[2][0] - r[0][2], r[0][1] - r[1][0]), m.p
    )


def vector_w_fp(m: FpMat3, i: int) -> FpVec3:
    """Exact cofactor-row eigenvector W_i, i in {1, 2, 3}."""
    _require_so(m)
    if i not in (1, 2, 3):
        raise IndexError(f"W index must be in {{1, 2, 3}}, got {i}")
    r = m.rows
    i0 = i - 1
    j0, k0 = [x for x in (0, 1, 2) if x != i0]
    w = [0, 0, 0]
    w[i0] = 1 + r[i0][i0] - r[j0][j0] - r[k0][k0]
    w[j0] = r[i0][j0] + r[j0][i0]
    w[k0] = r[i0][k0] + r[k0][i0]
    return FpVec3(tuple(w), m.p)


def _cofactor_rows(rows, p):
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = rows
    return (
        (
            (a22 * a33 - a23 * a32) % p,
            (a23 * a31 - a21 * a33) % p,
            (a21 * a32 - a22 * a31) % p,
        ),
        (
            (a13 * a32 - a12 * a33) % p,
            (a11 * a33 - a13 * a31) % p,
            (a12 * a31 - a11 * a32) % p,
        ),
        (
            (a12 * a23 - a13 * a22) % p,
            (a13 * a21 - a11 * a23) % p,
            (a11 * a22 - a12 * a21) % p,
        ),
    )


def _kernel_vector(rows, p):
    """A nonzero kernel vector of a singular matrix over Z_p, by Gaussian
    elimination; None if the matrix is invertible."""
    m = [list(r) for r in rows]
    perm = [0, 1, 2]
    rank = 0
    for col in range(3):
        piv = next((r for r in range(rank, 3) if m[r][col] % p != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(3):
            if r != rank and m[r][col] % p != 0:
                f = m[r][col]
                m[r] = [(m[r][c] - f * m[rank][c]) % p for c in range(3)]
        perm[rank] = col
        rank += 1
    if rank == 3:
        return None
    pivot_cols = perm[:rank]
    free = next(c for c in range(3) if c not in pivot_cols)
    v = [0, 0, 0]
    v[free] = 1
    for row, col in zip(range(rank), pivot_cols):
        v[col] = (-m[row][free]) % p
    return tuple(v)


def eigenvalue_one_certificate(m: FpMat3) -> FpVec3:
    """A nonzero v with m v = v mod p, certifying det(m - I) = 0.

    Uses the cofactor rows of m - I; if they all vanish (kernel dimension
    >= 2) falls back to an exhaustive kernel basis by Gaussian elimination.
    Requires a special orthogonal input other than the identity.
    """
    _require_so(m)
    p = m.p
    if m.rows == fp_identity(p).rows:
        raise ValueError("identity has no distinguished eigenvector")
    shifted = tuple(
        tuple((m.rows[i][j] - (1 if i == j else 0)) % p for j in range(3))
        for i in range(3)
    )
    for row in _cofactor_rows(shifted, p):
        if any(x != 0 for x in row):
            return FpVec3(row, p)
    v = _kernel_vector(shifted, p)
    if v is None:
        raise NotSpecialOrthogonalFp(
            f"matrix has no eigenvalue 1 mod {p}; it cannot be special "
            "orthogonal"
        )
    return FpVec3(v, p)


def circle_solutions(p: int) -> list[tuple[int, int]]:
    """All (a, b) with a^2 + b^2 = 1 mod p, by enumeration.

    Sorted lexicographically.  Raises ModulusTooLarge for p >= 10^6.
    """
    p = _check_modulus(p)
    if p >= CIRCLE_ENUMERATION_BOUND:
        raise ModulusTooLarge(
            f"enumeration supported for p < {CIRCLE_ENUMERATION_BOUND}"
        )
    roots: dict[int, list[int]] = {}
    for b in range(p):
        roots.setdefault(b * b % p, []).append(b)
    out = []
    for a in range(p):
        for b in roots.get((1 - a * a) % p, ()):
            out.append((a, b))
    return sorted(out)


def planar_rotation_embed(a: FpScalar, b: FpScalar, fixed_axis: int) -> FpMat3:
    """3x3 block matrix fixing one coordinate axis, from a circle point.

    For a^2 + b^2 = 1 mod p the planar block [[a, b], [-b, a]] is special
    orthogonal; it is embedded so coordinate ``fixed_axis`` (1-based) is
    fixed.  Raises NotOnCircle otherwise.
    """
    if a.p != b.p:
        raise ValueError("moduli differ")
    p = a.p
    if fixed_axis not in (1, 2, 3):
        raise IndexError(f"fixed_axis must be in {{1, 2, 3}}, got {fixed_axis}")
    if (a.value * a.value + b.value * b.value - 1) % p != 0:
        raise NotOnCircle(f"a^2 + b^2 != 1 mod {p}")
    av, bv = a.value, b.value
    if fixed_axis == 1:
        rows = ((1, 0, 0), (0, av, bv), (0, -bv, av))
    elif fixed_axis == 2:
        rows = ((av, 0, bv), (0, 1, 0), (-bv, 0, av))
    else:
        rows = ((av, bv, 0), (-bv, av, 0), (0, 0, 1))
    return FpMat3(rows, p)
