"""Ratio certificates, the tridiagonal form and the exact threshold."""

from .conditions import (
    CertificateReport,
    Comparison,
    Condition,
    InternalInconsistencyError,
    Verdict,
    check_even,
    check_hutchinson,
    check_odd,
)
from .form import (
    TridiagonalForm,
    all_minors_nonnegative,
    build_form,
    cofactor_determinant,
    dense_matrix,
    elimination_determinant,
    is_positive_definite,
    iter_minors,
    leading_minors,
    quadratic_form_value,
)
from .threshold import (
    AlgebraicThreshold,
    Relation,
    chebyshev_s,
    compare_ratio,
    generator_minimal_polynomial,
    threshold,
)

__all__ = [
    "AlgebraicThreshold",
    "CertificateReport",
    "Comparison",
    "Condition",
    "InternalInconsistencyError",
    "Relation",
    "TridiagonalForm",
    "Verdict",
    "all_minors_nonnegative",
    "build_form",
    "chebyshev_s",
    "check_even",
    "check_hutchinson",
    "check_odd",
    "cofactor_determinant",
    "compare_ratio",
    "dense_matrix",
    "elimination_determinant",
    "generator_minimal_polynomial",
    "is_positive_definite",
    "iter_minors",
    "leading_minors",
    "quadratic_form_value",
    "threshold",
]
