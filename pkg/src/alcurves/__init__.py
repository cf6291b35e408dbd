"""Exact invariants of superelliptic curves y^N = prod (x - lambda_i)^(A_i).

Regular-differential bases on three birational models, Cartier operator
matrices with symbolic branch points, and an independent truncated-series
route to the same matrix entries.
"""

from .cartier import (
    CartierData,
    CartierManinMatrix,
    block_structure,
    cartier_manin,
    cartier_on_form,
    evaluate_and_rank,
    gamma_coeffs,
)
from .curve import (
    CaseData,
    CurveSpec,
    HgmParams,
    INFINITY,
    LocalData,
    classify,
    curve_from_json,
    curve_poly,
    curve_to_json_obj,
    genus,
    hgm_params,
    local_data,
    singular_points,
    validate,
)
from .differentials import (
    BasisBlock,
    BasisReport,
    DifferentialForm,
    MODEL_C,
    MODEL_CTILDE,
    MODEL_X,
    MODELS,
    basis,
    basis_C,
    basis_Ctilde,
    basis_X,
    count_representations,
    is_regular_on_X,
    serre_local_membership,
    split_exponents,
)
from .errors import (
    AlcurvesError,
    BasisReexpressionFailed,
    BlockViolation,
    CharDividesN,
    DenominatorDivisibleByP,
    DuplicateBranchPoint,
    InfinityUndefinedInCase3,
    InvalidSpecialization,
    NegativeDPrime,
    NotCoprime,
    NotIrreducible,
    NotNormalized,
    NotPrime,
    PochhammerZeroDenominator,
    ValidationError,
    VariableMismatch,
)
from .exactmath import (
    BigRat,
    binomial_rational,
    double_factorial,
    gcd_all,
    is_prime,
    pochhammer,
    rat_to_fp,
    xgcd,
)
from .hypergeometric import (
    ALParams,
    SeparableDeformation,
    SeriesEntryParams,
    TruncationSpec,
    al_coefficient,
    binomial_pochhammer_identity,
    classical_Hp,
    gamma_via_hgm,
    lemma66_check,
    separable_deformation,
    series_entry_params,
    truncated_series,
)
from .mpoly import (
    MPoly,
    XPoly,
    align_variables,
    coeff_of_x,
    mpoly_pow,
    reduce_mod_p,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "ALParams",
    "AlcurvesError",
    "BasisBlock",
    "BasisReexpressionFailed",
    "BasisReport",
    "BigRat",
    "BlockViolation",
    "CartierData",
    "CartierManinMatrix",
    "CaseData",
    "CharDividesN",
    "CurveSpec",
    "DenominatorDivisibleByP",
    "DifferentialForm",
    "DuplicateBranchPoint",
    "HgmParams",
    "INFINITY",
    "InfinityUndefinedInCase3",
    "InvalidSpecialization",
    "LocalData",
    "MODEL_C",
    "MODEL_CTILDE",
    "MODEL_X",
    "MODELS",
    "MPoly",
    "NegativeDPrime",
    "NotCoprime",
    "NotIrreducible",
    "NotNormalized",
    "NotPrime",
    "PochhammerZeroDenominator",
    "SeparableDeformation",
    "SeriesEntryParams",
    "TruncationSpec",
    "ValidationError",
    "VariableMismatch",
    "XPoly",
    "al_coefficient",
    "align_variables",
    "basis",
    "basis_C",
    "basis_Ctilde",
    "basis_X",
    "binomial_pochhammer_identity",
    "binomial_rational",
    "block_structure",
    "cartier_manin",
    "cartier_on_form",
    "classical_Hp",
    "classify",
    "coeff_of_x",
    "count_representations",
    "curve_from_json",
    "curve_poly",
    "curve_to_json_obj",
    "double_factorial",
    "evaluate_and_rank",
    "gamma_coeffs",
    "gamma_via_hgm",
    "gcd_all",
    "genus",
    "hgm_params",
    "is_prime",
    "is_regular_on_X",
    "lemma66_check",
    "local_data",
    "mpoly_pow",
    "pochhammer",
    "rat_to_fp",
    "reduce_mod_p",
    "separable_deformation",
    "series_entry_params",
    "serre_local_membership",
    "singular_points",
    "split_exponents",
    "substitute",
    "validate",
    "xgcd",
]
