"""Arbitrary-precision convergence acceleration for slowly convergent series.

The core is a one-step realization of an enhanced Neville-style
extrapolation with exact rational weights, alongside the classical Wynn
epsilon and iterated Aitken processes for comparison, a convergence
diagnostic, subleading-coefficient extraction with closed-form recognition,
and a catalog of benchmark series including the hydrogen Bethe logarithms.
"""

from .mpnum import (
    BigReal,
    ExactRational,
    Precision,
    arctan,
    big,
    const_ln2,
    const_pi,
    const_zeta,
    decimal_ulp,
    exp,
    ln,
    log10,
    power,
    render_places,
)
from .weights import (
    ADJUDICATED_ROWS,
    MAX_CLOSED_FORM_ROW,
    CertificationReport,
    Mismatch,
    UnsupportedClosedFormError,
    WeightTable,
    certify_weights,
    closed_form_weights,
    oracle_weights,
    poly_P,
    row_identity_defect,
    transform_weights,
    weight_condition,
    weight_table,
    weight_table_csv,
)
from .transforms import (
    TRANSFORMS,
    PartialSums,
    PrecisionUnderflowError,
    TransformResult,
    aitken_iterated,
    chi_diagnostic,
    neville_one_step,
    neville_recursive,
    required_working_digits,
    wynn_epsilon,
)
from .special import (
    lerch_inner_sum,
    lerch_inner_sum_closed,
    lerch_phi,
    lerch_phi_direct,
    lerch_phi_transformed,
    polygamma,
)
from .asymptotics import (
    AsymptoticTermCoefficients,
    BetheAsymptoticsReport,
    CoefficientEstimates,
    RecognizedForm,
    d_estimator,
    recognize_form,
    remainder_expansion,
    tail_sum_oracle,
    verify_bethe_asymptotics,
)
from .catalog import (
    BETHE_COEFFS,
    BETHE_STATES,
    MODEL_COEFFS,
    MODEL_LIMIT_50,
    ClosedForm,
    SeriesFileError,
    SeriesSpec,
    bethe_constant_offset,
    bethe_limit,
    bethe_logarithm,
    bethe_series,
    model_series,
    series_from_file,
)

__version__ = "0.1.0"

__all__ = [
    "ADJUDICATED_ROWS",
    "AsymptoticTermCoefficients",
    "BETHE_COEFFS",
    "BETHE_STATES",
    "BetheAsymptoticsReport",
    "BigReal",
    "CertificationReport",
    "ClosedForm",
    "CoefficientEstimates",
    "ExactRational",
    "MAX_CLOSED_FORM_ROW",
    "Mismatch",
    "MODEL_COEFFS",
    "MODEL_LIMIT_50",
    "PartialSums",
    "Precision",
    "PrecisionUnderflowError",
    "RecognizedForm",
    "SeriesFileError",
    "SeriesSpec",
    "TRANSFORMS",
    "TransformResult",
    "UnsupportedClosedFormError",
    "WeightTable",
    "aitken_iterated",
    "arctan",
    "bethe_constant_offset",
    "bethe_limit",
    "bethe_logarithm",
    "bethe_series",
    "big",
    "certify_weights",
    "chi_diagnostic",
    "closed_form_weights",
    "const_ln2",
    "const_pi",
    "const_zeta",
    "d_estimator",
    "decimal_ulp",
    "exp",
    "lerch_inner_sum",
    "lerch_inner_sum_closed",
    "lerch_phi",
    "lerch_phi_direct",
    "lerch_phi_transformed",
    "ln",
    "log10",
    "model_series",
    "neville_one_step",
    "neville_recursive",
    "oracle_weights",
    "poly_P",
    "polygamma",
    "power",
    "recognize_form",
    "remainder_expansion",
    "render_places",
    "required_working_digits",
    "row_identity_defect",
    "series_from_file",
    "tail_sum_oracle",
    "transform_weights",
    "verify_bethe_asymptotics",
    "weight_condition",
    "weight_table",
    "weight_table_csv",
    "wynn_epsilon",
]
