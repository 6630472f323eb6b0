"""Partial transposition of matrix products and separability of two-qubit X states."""

from .bipartite import BipartiteDims, partial_transpose, pt_first
from .criteria import (
    CriterionReport,
    InequalityCheck,
    corollary1_check,
    counterexample_gap,
    counterexample_pt_product,
    counterexample_state,
    equality_holds,
    factor_report,
    ppt_verdict,
    pt_gap,
    tarazaga_pd,
    theorem2_check,
)
from .errors import (
    DimensionMismatch,
    EqualityHypothesisError,
    InvalidParams,
    MatrixFileError,
    NotDensityMatrix,
    NotHermitian,
    XsepError,
)
from .linalg import (
    DEFAULT_TOL,
    dagger,
    det,
    frobenius_norm,
    hermitian_eigenvalues,
    is_psd,
    min_eigenvalue,
    mul,
    trace,
    transpose,
)
from .xstate import (
    FactorPair,
    XMatrix,
    XParams,
    build_factors,
    concurrence,
    family_concurrence,
    is_x_shaped,
    product_state,
    x_eigenvalues,
    zero_concurrence_region,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteDims",
    "CriterionReport",
    "DEFAULT_TOL",
    "DimensionMismatch",
    "EqualityHypothesisError",
    "FactorPair",
    "InequalityCheck",
    "InvalidParams",
    "MatrixFileError",
    "NotDensityMatrix",
    "NotHermitian",
    "XMatrix",
    "XParams",
    "XsepError",
    "build_factors",
    "concurrence",
    "corollary1_check",
    "counterexample_gap",
    "counterexample_pt_product",
    "counterexample_state",
    "dagger",
    "det",
    "equality_holds",
    "factor_report",
    "family_concurrence",
    "frobenius_norm",
    "hermitian_eigenvalues",
    "is_psd",
    "is_x_shaped",
    "min_eigenvalue",
    "mul",
    "partial_transpose",
    "ppt_verdict",
    "product_state",
    "pt_first",
    "pt_gap",
    "tarazaga_pd",
    "theorem2_check",
    "trace",
    "transpose",
    "x_eigenvalues",
    "zero_concurrence_region",
]
