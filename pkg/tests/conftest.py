"""Shared oracles and helpers.

Oracles are deliberately independent of the package's closed forms:
determinants by permutation expansion, minors and eigenvectors through
LAPACK, Haar SU(3) sampling through QR.
"""

from __future__ import annotations

import math
import subprocess
import sys
from itertools import permutations
from pathlib import Path

import numpy as np
import pytest

from rotaxis import AxisAngle, exp_so3, random_rotations

GOLDEN_DIR = Path(__file__).parent / "golden"


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def perm_det3(m) -> float:
    """Determinant by the 6-term permutation sum (Leibniz formula)."""
    m = np.asarray(m)
    total = 0.0
    for p in permutations(range(3)):
        term = _perm_sign(p)
        for i, j in enumerate(p):
            term = term * m[i, j]
        total += term
    return total


def minor_oracle(m, i: int, j: int) -> float:
    """2x2 minor (1-based indices) through LAPACK."""
    m = np.asarray(m, dtype=float)
    rows = [r for r in range(3) if r != i - 1]
    cols = [c for c in range(3) if c != j - 1]
    return float(np.linalg.det(m[np.ix_(rows, cols)]))


def oracle_axis(m) -> np.ndarray:
    """Unit eigenvector for the det-sign eigenvalue, via np.linalg.eig."""
    m = np.asarray(m, dtype=float)
    s = 1.0 if np.linalg.det(m) > 0 else -1.0
    w, v = np.linalg.eig(m)
    k = int(np.argmin(np.abs(w - s)))
    vec = v[:, k]
    j = int(np.argmax(np.abs(vec)))
    vec = vec * np.exp(-1j * np.angle(vec[j]))
    vec = vec.real
    return vec / np.linalg.norm(vec)


def line_angle(u, v) -> float:
    """Angle in [0, pi/2] between lines, via the cross-product norm."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    c = np.array(
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    )
    return math.asin(min(1.0, float(np.linalg.norm(c))))


def haar(seed: int, count: int):
    return random_rotations(seed, count)


def random_unit(rng) -> np.ndarray:
    while True:
        v = rng.standard_normal(3)
        n = float(np.linalg.norm(v))
        if n > 1e-6:
            return v / n


def rotation_about(axis, angle):
    return exp_so3(AxisAngle(axis=np.asarray(axis, dtype=float), angle=angle))


def haar_su3(rng, min_gap: float = 1e-3) -> np.ndarray:
    """Haar SU(3) sample with a simple spectrum, via complex Ginibre QR."""
    while True:
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        q, r = np.linalg.qr(g)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        det = np.linalg.det(q)
        q = q * np.exp(-1j * np.angle(det) / 3.0)
        w = np.linalg.eigvals(q)
        gaps = [abs(w[0] - w[1]), abs(w[0] - w[2]), abs(w[1] - w[2])]
        if min(gaps) > min_gap:
            return q


def perturbed_pair_free(seed: int, count: int, min_pair_sum: float = 1e-3):
    """Haar rotations whose pair sums all exceed ``min_pair_sum``."""
    out = []
    for a in random_rotations(seed, count * 4):
        m = a.m
        sums = (
            abs(m[1, 2] + m[2, 1]),
            abs(m[0, 2] + m[2, 0]),
            abs(m[0, 1] + m[1, 0]),
        )
        if min(sums) > min_pair_sum:
            out.append(a)
            if len(out) == count:
                return out
    raise RuntimeError("not enough samples")


# ---------------------------------------------------------------------------
# CLI helpers


def run_cli(args, stdin: str = "", env_extra: dict | None = None):
    """Run the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    import os

    env = dict(os.environ)
    env.pop("AXIS_TOL", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "rotaxis.cli", *args],
        input=stdin.encode(),
        capture_output=True,
        env=env,
    )
    return proc.returncode, proc.stdout.decode(), proc.stderr.decode()


RZ90_TEXT = "0 -1 0 1 0 0 0 0 1\n"
ZEROS_CORRECTED_JSON = (
    '{"matrix": [[0.3333333333333333, 0.6666666666666666, 0.6666666666666666], '
    '[-0.6666666666666666, -0.3333333333333333, 0.6666666666666666], '
    '[0.6666666666666666, -0.6666666666666666, 0.3333333333333333]], '
    '"label": "zeros-corrected"}\n'
)
Z5_JSON = '{"matrix": [[4, 4, 3], [3, 4, 4], [4, 3, 4]], "modulus": 5, "label": "z5"}\n'
SU3_DIAG_JSON = (
    '{"matrix": [[[0.7648421872844885, 0.6442176872376911], [0, 0], [0, 0]], '
    '[[0, 0], [0.7648421872844885, -0.6442176872376911], [0, 0]], '
    '[[0, 0], [0, 0], [1, 0]]], "label": "su3-diag"}\n'
)

# (name, argv, stdin, expected exit code); stdout is frozen under
# tests/golden/<name>.out.
GOLDEN_CASES = [
    ("axis_rz90_u", ["axis", "--method", "u"], RZ90_TEXT, 0),
    ("axis_rz90_auto", ["axis"], RZ90_TEXT, 0),
    ("axis_rz90_w3_degrees", ["axis", "--method", "w3", "--degrees"], RZ90_TEXT, 0),
    ("axis_rz90_resolvent", ["axis", "--method", "resolvent"], RZ90_TEXT, 0),
    ("axis_rz90_degenerate", ["axis", "--method", "degenerate"], RZ90_TEXT, 0),
    ("axis_zeros_json", ["axis"], ZEROS_CORRECTED_JSON, 0),
    ("axis_z5_modulus", ["axis"], Z5_JSON, 0),
    ("axis_reflection_det_minus1", ["axis"], "1 0 0 0 1 0 0 0 -1\n", 0),
    ("gen_seed42", ["gen", "--seed", "42", "--count", "3"], "", 0),
    ("gen_fixed_angle", ["gen", "--seed", "5", "--count", "2", "--angle", "1.0"], "", 0),
    ("xval_seed7", ["xval", "--seed", "7", "--count", "5", "--report"], "", 0),
    ("check_zeros", ["check"], ZEROS_CORRECTED_JSON, 0),
    ("check_det_minus1", ["check"], "1 0 0 0 1 0 0 0 -1\n", 0),
    ("ff_circle_7", ["ff", "circle", "--modulus", "7"], "", 0),
    ("ff_circle_5", ["ff", "circle", "--modulus", "5"], "", 0),
    ("ff_check_z5", ["ff", "check", "--modulus", "5"], Z5_JSON, 0),
    ("ff_axis_z5", ["ff", "axis", "--modulus", "5"], Z5_JSON, 0),
    (
        "ff_generate_7",
        ["ff", "generate", "--modulus", "7", "--seed", "1", "--count", "2"],
        "",
        0,
    ),
    ("su3_diag", ["su3", "--lambda-index", "1"], SU3_DIAG_JSON, 0),
    ("axis_pretty", ["axis", "--pretty"], RZ90_TEXT, 0),
]

# (name, argv, stdin, expected exit code, stderr substring)
ERROR_CASES = [
    ("parse_garbage", ["axis"], "not a matrix\n", 2, "parse error"),
    ("parse_wrong_count", ["axis"], "1 2 3 4\n", 2, "parse error"),
    ("parse_bad_json", ["axis"], '{"matrix": [[1,2],[3,4]]}\n', 2, "parse error"),
    (
        "not_orthogonal",
        ["axis"],
        "2 0 0 0 2 0 0 0 2\n",
        3,
        "validation failed",
    ),
    ("identity_input", ["axis"], "1 0 0 0 1 0 0 0 1\n", 4, "IdentityInput"),
    (
        "forced_v_degenerate",
        ["axis", "--method", "v"],
        RZ90_TEXT,
        4,
        "DegenerateDenominator",
    ),
    (
        "forced_u_symmetric",
        ["axis", "--method", "u"],
        "-0.3333333333333333 0.6666666666666667 0.6666666666666667 "
        "0.6666666666666667 -0.3333333333333333 0.6666666666666667 "
        "0.6666666666666667 0.6666666666666667 -0.3333333333333333\n",
        4,
        "MethodInapplicable",
    ),
    (
        "composite_modulus",
        ["ff", "circle", "--modulus", "9"],
        "",
        2,
        "odd prime",
    ),
]


@pytest.fixture(scope="session")
def haar_pool_500():
    return list(random_rotations(881, 500))
