"""Multi-point AG codes on generalized Hermitian curves."""

from ._core import (
    BudgetExceeded,
    Curve,
    CurveError,
    CurveParams,
    FieldError,
    LinearCode,
    ThresholdError,
    build_code,
    code_dimension,
    curve_params,
    degree,
    dual_spec,
    equivalence_witness,
    gv_compare,
    omega,
    omega_count_formula,
    omega_reduce,
    pick_count,
    psi_count,
    q_ary_entropy,
    row_space_equal,
    run_cli,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "Curve",
    "CurveError",
    "CurveParams",
    "FieldError",
    "LinearCode",
    "ThresholdError",
    "build_code",
    "code_dimension",
    "curve_params",
    "degree",
    "dual_spec",
    "equivalence_witness",
    "gv_compare",
    "omega",
    "omega_count_formula",
    "omega_reduce",
    "pick_count",
    "psi_count",
    "q_ary_entropy",
    "row_space_equal",
    "run_cli",
    "verify",
]
