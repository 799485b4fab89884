"""Batch command-line front end.

Subcommands: ``axis`` (extract the fixed axis), ``gen`` (seeded rotation
samples), ``xval`` (cross-validate every applicable construction),
``check`` (validation / identity report), ``ff`` (prime-field mode) and
``su3`` (special unitary mode).

Input formats, auto-detected by the first non-space byte: plain text (9
whitespace-separated numbers per matrix, row-major) or one JSON document
per line, ``{"matrix": [[...], [...], [...]]}`` with optional "modulus"
and "label"; su3 entries are [re, im] pairs.  Output is one JSON document
per line with floats printed to 17 significant digits, so identical inputs
and seeds rerun byte-identically.

Exit codes: 0 success, 1 cross-validation over threshold, 2 parse failure,
3 failed orthogonality/unitarity validation, 4 method inapplicable or
identity input.  The environment variable AXIS_TOL overrides the default
validation tolerance of 1e-9.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import axis_formulas as af
from . import finite_field as ff
from . import su3_unitary as su
from .errors import (
    DegenerateDenominator,
    DegenerateDenominatorFp,
    EigenvalueTooClose,
    IdentityInput,
    MethodInapplicable,
    MinusOneEigenvalue,
    NotAnEigenvalue,
    NotDegenerate,
    NotOrthogonal,
    NotSpecialOrthogonalFp,
    NotUnitary,
    RankDeficient,
    RotaxisError,
    WrongDeterminant,
    ZeroVector,
)
from .linalg_core import OrthogonalMatrix, det3, validate_orthogonal
from .representations import AxisAngle, _haar_from_rng, exp_so3, random_rotations
from .resolvent_projection import projection_adjugate

XVAL_DEVIATION_LIMIT = 1e-8

EXIT_OK = 0
EXIT_XVAL_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_ORTHOGONAL = 3
EXIT_INAPPLICABLE = 4

_VALIDATION_ERRORS = (NotOrthogonal, NotUnitary, NotSpecialOrthogonalFp)
_METHOD_ERRORS = (
    IdentityInput,
    MethodInapplicable,
    DegenerateDenominator,
    DegenerateDenominatorFp,
    NotDegenerate,
    MinusOneEigenvalue,
    EigenvalueTooClose,
    RankDeficient,
    NotAnEigenvalue,
    ZeroVector,
    WrongDeterminant,
)


class InputError(RotaxisError):
    """Input document failed to parse or violated its schema."""


@dataclass
class MatrixDocument:
    """One parsed input matrix with optional modulus and label."""

    matrix: list
    modulus: int | None = None
    label: str | None = None
    complex_entries: bool = False


# ---------------------------------------------------------------------------
# parsing


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _entry_from_json(x, allow_complex: bool):
    if isinstance(x, bool):
        raise InputError("matrix entries must be numbers")
    if isinstance(x, (int, float)):
        return x
    if (
        allow_complex
        and isinstance(x, list)
        and len(x) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in x)
    ):
        return complex(x[0], x[1])
    raise InputError(f"bad matrix entry {x!r}")


def _doc_from_obj(obj, allow_complex: bool) -> MatrixDocument:
    import json

    if not isinstance(obj, dict) or "matrix" not in obj:
        raise InputError('JSON document must be an object with a "matrix" key')
    rows = obj["matrix"]
    if not isinstance(rows, list) or len(rows) != 3 or any(
        not isinstance(r, list) or len(r) != 3 for r in rows
    ):
        raise InputError('"matrix" must be a 3x3 array (9 entries)')
    entries = [[_entry_from_json(x, allow_complex) for x in r] for r in rows]
    is_complex = any(isinstance(x, complex) for r in entries for x in r)
    modulus = obj.get("modulus")
    if modulus is not None:
        if not isinstance(modulus, int) or isinstance(modulus, bool):
            raise InputError('"modulus" must be an integer')
        if is_complex:
            raise InputError("complex entries cannot carry a modulus")
        for r in entries:
            for x in r:
                if not isinstance(x, int):
                    raise InputError("modulus mode needs integer entries")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise InputError('"label" must be a string')
    return MatrixDocument(
        matrix=entries,
        modulus=modulus,
        label=label,
        complex_entries=is_complex,
    )


def parse_documents(text: str, allow_complex: bool = False) -> list[MatrixDocument]:
    """Parse plain-text or JSON-lines matrix documents."""
    import json

    stripped = text.lstrip()
    if not stripped:
        raise InputError("empty input")
    if stripped[0] == "{":
        docs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            docs.append(_doc_from_obj(obj, allow_complex))
        return docs
    tokens = text.split()
    values = []
    for tok in tokens:
        try:
            values.append(float(tok))
        except ValueError as exc:
            raise InputError(f"bad number {tok!r}") from exc
    if not values or len(values) % 9 != 0:
        raise InputError(
            f"plain input must hold 9 numbers per matrix, got {len(values)}"
        )
    docs = []
    for base in range(0, len(values), 9):
        chunk = values[base : base + 9]
        docs.append(
            MatrixDocument(matrix=[chunk[0:3], chunk[3:6], chunk[6:9]])
        )
    return docs


# ---------------------------------------------------------------------------
# output rendering


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def render_json(value, pretty: bool = False, _depth: int = 0) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    import json

    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _fmt_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        items = [render_json(v, pretty, _depth + 1) for v in value]
        if not pretty:
            return "[" + ", ".join(items) + "]"
        pad = "  " * (_depth + 1)
        return "[\n" + ",\n".join(pad + s for s in items) + "\n" + "  " * _depth + "]"
    if isinstance(value, dict):
        items = [
            f"{json.dumps(str(k))}: {render_json(v, pretty, _depth + 1)}"
            for k, v in value.items()
        ]
        if not pretty:
            return "{" + ", ".join(items) + "}"
        pad = "  " * (_depth + 1)
        return "{\n" + ",\n".join(pad + s for s in items) + "\n" + "  " * _depth + "}"
    raise TypeError(f"cannot render {type(value)!r}")


def _emit(doc: dict, pretty: bool) -> None:
    sys.stdout.write(render_json(doc, pretty=pretty) + "\n")


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real) + 0.0, float(z.imag) + 0.0]  # + 0.0 clears -0.0


# ---------------------------------------------------------------------------
# shared pieces


def _default_tol() -> float:
    raw = os.environ.get("AXIS_TOL")
    if raw is None:
        return 1e-9
    try:
        tol = float(raw)
    except ValueError as exc:
        raise InputError(f"AXIS_TOL is not a number: {raw!r}") from exc
    if not tol > 0:
        raise InputError("AXIS_TOL must be positive")
    return tol


def _validated(doc: MatrixDocument, tol: float) -> OrthogonalMatrix:
    if doc.complex_entries:
        raise InputError("complex entries are only accepted by the su3 command")
    return validate_orthogonal(np.array(doc.matrix, dtype=float), tol=tol)


def _resolvent_direction(a: OrthogonalMatrix) -> np.ndarray:
    base = a if a.det_sign == 1 else validate_orthogonal(-a.m, tol=max(a.ortho_residual * 4, 1e-12))
    p = projection_adjugate(base).p
    col = int(np.argmax(np.abs(p).sum(axis=0)))
    return p[:, col].copy()


def _axis_report(a: OrthogonalMatrix, method: str) -> af.EigenReport:
    if method == "resolvent":
        return af.finalize_report(a, _resolvent_direction(a), "RESOLVENT")
    return af.extract_axis(a, method=method)


def _report_doc(report: af.EigenReport, label: str | None, degrees: bool) -> dict:
    doc: dict = {}
    if label is not None:
        doc["label"] = label
    doc["axis"] = [float(x) for x in report.axis]
    if degrees:
        doc["angle_deg"] = math.degrees(report.angle)
    else:
        doc["angle_rad"] = report.angle
    doc["eigenvalue"] = report.eigenvalue
    doc["method"] = report.method
    doc["residual"] = report.residual
    return doc


def line_angle(u, v) -> float:
    """Angle in [0, pi/2] between the lines spanned by u and v.

    Uses the cross-product norm, which stays accurate for nearly parallel
    lines where 1 - (u.v)^2 would cancel catastrophically.
    """
    u1, u2, u3 = (float(x) for x in u)
    v1, v2, v3 = (float(x) for x in v)
    nu = math.sqrt(u1 * u1 + u2 * u2 + u3 * u3)
    nv = math.sqrt(v1 * v1 + v2 * v2 + v3 * v3)
    c1 = u2 * v3 - u3 * v2
    c2 = u3 * v1 - u1 * v3
    c3 = u1 * v2 - u2 * v1
    s = math.sqrt(c1 * c1 + c2 * c2 + c3 * c3) / (nu * nv)
    return math.asin(min(1.0, s))


def cross_validate_matrix(a: OrthogonalMatrix) -> dict:
    """Evaluate every applicable construction on one matrix.

    Returns unit directions per method, the worst eigen-residual, the worst
    pairwise line deviation, and the inapplicable-method list.  Written with
    scalar arithmetic: batch cross-validation is the hot loop.
    """
    s = a.det_sign
    rows = a.m.tolist()
    (m11, m12, m13), (m21, m22, m23), (m31, m32, m33) = rows
    # b = det_sign * A is the rotation part; V and U of A span the same
    # lines as those of b, while W and the cofactor/resolvent rows need b.
    if s == 1:
        (b11, b12, b13), (b21, b22, b23), (b31, b32, b33) = rows
    else:
        b11, b12, b13 = -m11, -m12, -m13
        b21, b22, b23 = -m21, -m22, -m23
        b31, b32, b33 = -m31, -m32, -m33

    raw: list[tuple[str, tuple[float, float, float]]] = []
    inapplicable: list[str] = []

    s23, s13, s12 = m23 + m32, m13 + m31, m12 + m21
    if min(abs(s23), abs(s13), abs(s12)) > af.EPS_DEGENERATE:
        raw.append(("V", (1.0 / s23, 1.0 / s13, 1.0 / s12)))
    else:
        inapplicable.append("V")

    u = (m23 - m32, m31 - m13, m12 - m21)
    if max(abs(u[0]), abs(u[1]), abs(u[2])) > af.EPS_SYMMETRIC:
        raw.append(("U", u))
    else:
        inapplicable.append("U")

    ws = (
        ((1.0 + b11) - (b22 + b33), b12 + b21, b13 + b31),
        (b12 + b21, (1.0 + b22) - (b11 + b33), b23 + b32),
        (b13 + b31, b23 + b32, (1.0 + b33) - (b11 + b22)),
    )
    for i, w in enumerate(ws, start=1):
        if max(abs(w[0]), abs(w[1]), abs(w[2])) > af.EPS_SYMMETRIC:
            raw.append((f"W{i}", w))
        else:
            inapplicable.append(f"W{i}")

    # Cofactor rows of b - I; the same three vectors are the columns of the
    # adjugate resolvent projection adj(I - b)/(3 - trace b), so the
    # resolvent direction reuses the best row with the projection scaling.
    d11, d22, d33 = b11 - 1.0, b22 - 1.0, b33 - 1.0
    cof_rows = (
        (
            d22 * d33 - b23 * b32,
            b23 * b31 - b21 * d33,
            b21 * b32 - d22 * b31,
        ),
        (
            b13 * b32 - b12 * d33,
            d11 * d33 - b13 * b31,
            b12 * b31 - d11 * b32,
        ),
        (
            b12 * b23 - b13 * d22,
            b13 * b21 - d11 * b23,
            d11 * d22 - b12 * b21,
        ),
    )
    norms = [max(abs(r[0]), abs(r[1]), abs(r[2])) for r in cof_rows]
    best = norms.index(max(norms))
    if norms[best] > 1e-12:
        raw.append(("COFACTOR", cof_rows[best]))
        gap = 3.0 - (b11 + b22 + b33)
        r = cof_rows[best]
        raw.append(("RESOLVENT", (r[0] / gap, r[1] / gap, r[2] / gap)))
    else:
        inapplicable.extend(["COFACTOR", "RESOLVENT"])

    units: dict[str, np.ndarray] = {}
    unit_list: list[tuple[float, float, float]] = []
    max_residual = 0.0
    for name, (v1, v2, v3) in raw:
        n = math.sqrt(v1 * v1 + v2 * v2 + v3 * v3)
        if n == 0.0:
            inapplicable.append(name)
            continue
        v1, v2, v3 = v1 / n, v2 / n, v3 / n
        res = max(
            abs(m11 * v1 + m12 * v2 + m13 * v3 - s * v1),
            abs(m21 * v1 + m22 * v2 + m23 * v3 - s * v2),
            abs(m31 * v1 + m32 * v2 + m33 * v3 - s * v3),
        )
        max_residual = max(max_residual, res)
        units[name] = np.array([v1, v2, v3])
        unit_list.append((v1, v2, v3))

    max_sin = 0.0
    for x in range(len(unit_list)):
        u1, u2, u3 = unit_list[x]
        for y in range(x + 1, len(unit_list)):
            v1, v2, v3 = unit_list[y]
            c1 = u2 * v3 - u3 * v2
            c2 = u3 * v1 - u1 * v3
            c3 = u1 * v2 - u2 * v1
            max_sin = max(max_sin, c1 * c1 + c2 * c2 + c3 * c3)
    max_dev = math.asin(min(1.0, math.sqrt(max_sin)))
    return {
        "directions": units,
        "max_residual": max_residual,
        "max_angular_dev": max_dev,
        "inapplicable": sorted(inapplicable),
    }


# ---------------------------------------------------------------------------
# finite-field pieces


def _fp_matrix(doc: MatrixDocument, modulus: int) -> ff.FpMat3:
    try:
        return ff.FpMat3(tuple(tuple(int(x) for x in r) for r in doc.matrix), modulus)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _fp_canonical(v: ff.FpVec3) -> list[int]:
    lead = next((x for x in v.entries if x != 0), None)
    if lead is None:
        return list(v.entries)
    inv = pow(lead, -1, v.p)
    return [(x * inv) % v.p for x in v.entries]


def _fp_axis(m: ff.FpMat3, method: str) -> tuple[list[int], str]:
    if not ff.is_special_orthogonal_fp(m):
        raise NotSpecialOrthogonalFp(
            f"matrix is not special orthogonal mod {m.p}"
        )
    if method in ("degenerate", "resolvent"):
        raise MethodInapplicable(f"method {method} has no mod-p form")
    if method == "v":
        return _fp_canonical(ff.vector_v_fp(m)), "V"
    if method == "u":
        v = ff.vector_u_fp(m)
        if all(x == 0 for x in v.entries):
            raise MethodInapplicable("U vanishes mod p")
        return _fp_canonical(v), "U"
    if method in ("w1", "w2", "w3"):
        i = int(method[1])
        v = ff.vector_w_fp(m, i)
        if all(x == 0 for x in v.entries):
            raise MethodInapplicable(f"W{i} vanishes mod p")
        return _fp_canonical(v), f"W{i}"
    if method == "cofactor":
        return _fp_canonical(ff.eigenvalue_one_certificate(m)), "COFACTOR"
    # auto: mirror the real-mode preference order U, W_i, then the kernel
    # certificate.
    v = ff.vector_u_fp(m)
    if any(x != 0 for x in v.entries):
        return _fp_canonical(v), "U"
    for i in (1, 2, 3):
        w = ff.vector_w_fp(m, i)
        if any(x != 0 for x in w.entries):
            return _fp_canonical(w), f"W{i}"
    return _fp_canonical(ff.eigenvalue_one_certificate(m)), "COFACTOR"


# ---------------------------------------------------------------------------
# subcommands


def cmd_axis(args) -> int:
    docs = parse_documents(_read_input(args.input))
    for doc in docs:
        if doc.modulus is not None:
            m = _fp_matrix(doc, doc.modulus)
            if m.rows == ff.fp_identity(m.p).rows:
                raise IdentityInput("identity matrix has no distinguished axis")
            axis, tag = _fp_axis(m, args.method)
            out: dict = {}
            if doc.label is not None:
                out["label"] = doc.label
            out["axis"] = axis
            out["eigenvalue"] = 1
            out["method"] = tag
            out["modulus"] = m.p
            _emit(out, args.pretty)
            continue
        a = _validated(doc, args.tol)
        report = _axis_report(a, args.method)
        _emit(_report_doc(report, doc.label, args.degrees), args.pretty)
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = np.random.Generator(np.random.Philox(args.seed))
    for idx in range(args.count):
        if args.angle is None:
            a = _haar_from_rng(rng)
        else:
            while True:
                axis = rng.standard_normal(3)
                if float(np.linalg.norm(axis)) > 1e-6:
                    break
            a = exp_so3(AxisAngle(axis=axis, angle=args.angle))
        doc = {
            "label": f"gen-{args.seed}-{idx}",
            "matrix": [[float(x) for x in row] for row in a.m],
        }
        _emit(doc, args.pretty)
    return EXIT_OK


def cmd_xval(args) -> int:
    if args.seed is not None:
        matrices = list(random_rotations(args.seed, args.count))
        labels = [f"gen-{args.seed}-{i}" for i in range(args.count)]
    else:
        docs = parse_documents(_read_input(args.input))
        matrices = [_validated(doc, args.tol) for doc in docs]
        labels = [doc.label for doc in docs]
    failures = 0
    worst_dev = 0.0
    worst_res = 0.0
    for idx, (a, label) in enumerate(zip(matrices, labels)):
        result = cross_validate_matrix(a)
        worst_dev = max(worst_dev, result["max_angular_dev"])
        worst_res = max(worst_res, result["max_residual"])
        if result["max_angular_dev"] > XVAL_DEVIATION_LIMIT:
            failures += 1
        if args.report:
            doc = {"index": idx}
            if label is not None:
                doc["label"] = label
            doc["max_angular_dev"] = result["max_angular_dev"]
            doc["max_residual"] = result["max_residual"]
            doc["inapplicable"] = result["inapplicable"]
            _emit(doc, args.pretty)
    summary = {
        "count": len(matrices),
        "max_angular_dev": worst_dev,
        "max_residual": worst_res,
        "failures": failures,
    }
    _emit(summary, args.pretty)
    return EXIT_XVAL_FAILED if failures else EXIT_OK


def cmd_check(args) -> int:
    from .linalg_core import cofactor_identity_residual, laplace_cofactor_residual

    docs = parse_documents(_read_input(args.input))
    for doc in docs:
        a = _validated(doc, args.tol)
        m = a.m
        pairs = [
            [i, j]
            for i, j in ((1, 2), (1, 3), (2, 3))
            if abs(m[i - 1, j - 1] + m[j - 1, i - 1]) <= af.EPS_DEGENERATE
        ]
        out: dict = {}
        if doc.label is not None:
            out["label"] = doc.label
        out["ortho_residual"] = a.ortho_residual
        out["det"] = det3(m)
        out["trace"] = a.trace
        out["angle_rad"] = af.rotation_angle(a)
        out["degenerate_pairs"] = pairs
        if a.det_sign == 1:
            out["lemma3_max"] = max(af.lemma3_residuals(a))
            out["cofactor_identity_max"] = float(
                np.max(cofactor_identity_residual(a))
            )
        else:
            out["lemma3_max"] = None
            out["cofactor_identity_max"] = None
        out["laplace_identity_max"] = laplace_cofactor_residual(m)
        _emit(out, args.pretty)
    return EXIT_OK


def cmd_ff(args) -> int:
    p = args.modulus
    try:
        ff.FpScalar(0, p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    if args.action == "circle":
        sols = ff.circle_solutions(p)
        _emit(
            {
                "modulus": p,
                "count": len(sols),
                "solutions": [[a, b] for a, b in sols],
            },
            args.pretty,
        )
        return EXIT_OK

    if args.action == "generate":
        sols = ff.circle_solutions(p)
        rng = np.random.Generator(np.random.Philox(args.seed))
        for idx in range(args.count):
            m = ff.fp_identity(p)
            for _ in range(args.factors):
                a, b = sols[int(rng.integers(len(sols)))]
                axis = int(rng.integers(1, 4))
                m = ff.fp_multiply(
                    m,
                    ff.planar_rotation_embed(
                        ff.FpScalar(a, p), ff.FpScalar(b, p), axis
                    ),
                )
            _emit(
                {
                    "label": f"ff-{args.seed}-{idx}",
                    "modulus": p,
                    "matrix": [list(r) for r in m.rows],
                },
                args.pretty,
            )
        return EXIT_OK

    docs = parse_documents(_read_input(args.input))
    for doc in docs:
        m = _fp_matrix(doc, doc.modulus or p)
        if args.action == "check":
            out = {}
            if doc.label is not None:
                out["label"] = doc.label
            out["modulus"] = m.p
            out["special_orthogonal"] = ff.is_special_orthogonal_fp(m)
            out["det"] = ff.fp_det(m)
            _emit(out, args.pretty)
        else:  # axis
            if m.rows == ff.fp_identity(m.p).rows:
                raise IdentityInput("identity matrix has no distinguished axis")
            axis, tag = _fp_axis(m, args.method)
            out = {}
            if doc.label is not None:
                out["label"] = doc.label
            out["axis"] = axis
            out["eigenvalue"] = 1
            out["method"] = tag
            out["modulus"] = m.p
            _emit(out, args.pretty)
    return EXIT_OK


def cmd_su3(args) -> int:
    docs = parse_documents(_read_input(args.input), allow_complex=True)
    for doc in docs:
        if doc.modulus is not None:
            raise InputError("su3 mode does not accept a modulus")
        a = su.validate_unitary(
            np.array(doc.matrix, dtype=complex), tol=args.tol
        )
        lams = su.su3_eigenvalues(a)
        lam = lams[args.lambda_index]
        rows = []
        for i in (1, 2, 3):
            try:
                rows.append((i, su.su3_w(a, lam, i)))
            except ZeroVector:
                continue
        if not rows:
            raise ZeroVector("all cofactor rows vanish; eigenvalue not simple")
        i_best, w = max(rows, key=lambda iw: float(np.max(np.abs(iw[1]))))
        k = int(np.argmax(np.abs(w)))
        w = w / w[k]
        w = w / np.linalg.norm(w)
        residual = float(np.max(np.abs(a.m @ w - lam * w)))
        out: dict = {}
        if doc.label is not None:
            out["label"] = doc.label
        out["lambda"] = _complex_pair(lam)
        out["eigenvector"] = [_complex_pair(z) for z in w]
        out["w_index"] = i_best
        out["residual"] = residual
        _emit(out, args.pretty)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing / entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotaxis",
        description="Closed-form fixed-axis extraction for 3x3 orthogonal "
        "matrices, with cross-validation, prime-field and SU(3) modes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument(
                "input",
                nargs="?",
                default="-",
                help="input file, or - for standard input (default)",
            )
        p.add_argument(
            "--tol",
            type=float,
            default=None,
            help="orthogonality tolerance (default 1e-9, or AXIS_TOL)",
        )
        p.add_argument("--pretty", action="store_true", help="indent output")

    p_axis = sub.add_parser("axis", help="extract the rotation axis")
    add_common(p_axis)
    p_axis.add_argument(
        "--method",
        choices=["auto", "v", "u", "w1", "w2", "w3", "cofactor", "degenerate", "resolvent"],
        default="auto",
    )
    p_axis.add_argument(
        "--degrees", action="store_true", help="report the angle in degrees"
    )
    p_axis.set_defaults(func=cmd_axis)

    p_gen = sub.add_parser("gen", help="generate seeded rotation samples")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument(
        "--angle",
        type=float,
        default=None,
        help="fixed rotation angle (random axis); default Haar",
    )
    p_gen.add_argument("--pretty", action="store_true")
    p_gen.set_defaults(func=cmd_gen)

    p_xval = sub.add_parser(
        "xval", help="cross-validate every applicable construction"
    )
    add_common(p_xval)
    p_xval.add_argument("--seed", type=int, default=None)
    p_xval.add_argument("--count", type=int, default=100)
    p_xval.add_argument(
        "--report", action="store_true", help="one document per matrix"
    )
    p_xval.set_defaults(func=cmd_xval)

    p_check = sub.add_parser("check", help="validation and identity report")
    add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_ff = sub.add_parser("ff", help="prime-field mode")
    p_ff.add_argument("action", choices=["check", "axis", "circle", "generate"])
    add_common(p_ff)
    p_ff.add_argument("--modulus", type=int, required=True)
    p_ff.add_argument(
        "--method",
        choices=["auto", "v", "u", "w1", "w2", "w3", "cofactor"],
        default="auto",
    )
    p_ff.add_argument("--seed", type=int, default=0)
    p_ff.add_argument("--count", type=int, default=1)
    p_ff.add_argument("--factors", type=int, default=3)
    p_ff.set_defaults(func=cmd_ff)

    p_su3 = sub.add_parser("su3", help="special unitary mode")
    add_common(p_su3)
    p_su3.add_argument(
        "--lambda-index",
        type=int,
        choices=[0, 1, 2],
        default=0,
        help="which eigenvalue (sorted by phase) to use",
    )
    p_su3.set_defaults(func=cmd_su3)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "tol", None) is None and hasattr(args, "tol"):
            args.tol = _default_tol()
        return args.func(args)
    except InputError as exc:
        print(f"rotaxis: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _VALIDATION_ERRORS as exc:
        print(f"rotaxis: validation failed: {exc}", file=sys.stderr)
        return EXIT_NOT_ORTHOGONAL
    except _METHOD_ERRORS as exc:
        print(f"rotaxis: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    raise SystemExit(main())
