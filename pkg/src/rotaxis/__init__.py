"""Closed-form fixed-axis extraction for 3x3 orthogonal matrices.

The axis of a rotation (the eigenvector of the determinant-sign eigenvalue)
admits several closed forms in the matrix entries: componentwise
reciprocals of the off-diagonal pair sums, skew differences, cofactor rows,
and spectral projections.  This package implements all of them, converts
among the rotation parameterizations they arise from, covers the degenerate
(vanishing pair sum) taxonomy, and carries the same constructions to prime
fields (exactly) and to SU(3).
"""

from .axis_formulas import (
    AUTO,
    DegenerateFamilyParams,
    DegenerateTag,
    EigenReport,
    degenerate_axis,
    degenerate_family,
    extract_axis,
    lemma3_residuals,
    rotation_angle,
    vector_u,
    vector_v,
    vector_w,
)
from .cofactor_kernel import (
    SkewParams,
    eigvec_via_cofactors,
    rank2_kernel_rows,
    skew_matrix,
    symmetric_kernel_check,
)
from .errors import RotaxisError
from .finite_field import (
    FpMat3,
    FpScalar,
    FpVec3,
    circle_solutions,
    eigenvalue_one_certificate,
    fp_inverse,
    is_special_orthogonal_fp,
    planar_rotation_embed,
    vector_u_fp,
    vector_v_fp,
    vector_w_fp,
)
from .linalg_core import (
    Mat3,
    OrthogonalMatrix,
    Vec3,
    adjugate,
    cofactor,
    cofactor_identity_residual,
    cofactor_matrix,
    cross,
    det3,
    laplace_cofactor_residual,
    validate_orthogonal,
)
from .representations import (
    AxisAngle,
    Quaternion,
    ReflectionPair,
    axis_angle_to_quat,
    cayley_compose,
    cayley_decompose,
    compose_reflections,
    exp_so3,
    log_so3,
    matrix_to_quat,
    quat_to_matrix,
    random_rotation,
    random_rotations,
    reflection_sum_identity_residual,
)
from .resolvent_projection import (
    ProjectionReport,
    complex_eigenvalue,
    projection_adjugate,
    projection_contour,
)
from .su3_unitary import (
    UnitaryMatrix,
    su3_eigenvalues,
    su3_paper_form_discrepancy,
    su3_w,
    validate_unitary,
)

__version__ = "0.1.0"

__all__ = [
    "AUTO",
    "AxisAngle",
    "DegenerateFamilyParams",
    "DegenerateTag",
    "EigenReport",
    "FpMat3",
    "FpScalar",
    "FpVec3",
    "Mat3",
    "OrthogonalMatrix",
    "ProjectionReport",
    "Quaternion",
    "ReflectionPair",
    "RotaxisError",
    "SkewParams",
    "UnitaryMatrix",
    "Vec3",
    "adjugate",
    "axis_angle_to_quat",
    "cayley_compose",
    "cayley_decompose",
    "circle_solutions",
    "cofactor",
    "cofactor_identity_residual",
    "cofactor_matrix",
    "complex_eigenvalue",
    "compose_reflections",
    "cross",
    "degenerate_axis",
    "degenerate_family",
    "det3",
    "eigenvalue_one_certificate",
    "eigvec_via_cofactors",
    "exp_so3",
    "extract_axis",
    "fp_inverse",
    "is_special_orthogonal_fp",
    "laplace_cofactor_residual",
    "lemma3_residuals",
    "log_so3",
    "matrix_to_quat",
    "planar_rotation_embed",
    "projection_adjugate",
    "projection_contour",
    "quat_to_matrix",
    "random_rotation",
    "random_rotations",
    "rank2_kernel_rows",
    "reflection_sum_identity_residual",
    "rotation_angle",
    "skew_matrix",
    "su3_eigenvalues",
    "su3_paper_form_discrepancy",
    "su3_w",
    "symmetric_kernel_check",
    "validate_orthogonal",
    "validate_unitary",
    "vector_u",
    "vector_u_fp",
    "vector_v",
    "vector_v_fp",
    "vector_w",
    "vector_w_fp",
]
