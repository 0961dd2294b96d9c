"""Symmetric bivariate means, their power-type transforms, and tools for
locating and checking sharp exponents in comparisons between them."""

from .jets import (
    Jet,
    OrderMismatch,
    PoleError,
    jet_compose_elementary,
    jet_div,
    mean_series,
    power_type_series,
)
from .means import (
    DiagonalWeights,
    DomainError,
    EndpointNotAvailable,
    MeanKind,
    MeanValue,
    PowerTypeSpec,
    diagonal_weights,
    endpoint_limit,
    evaluate,
    mean_eval,
    power_type_eval,
    rescaling_identity_residual,
)
from .scan import default_grid, diagonal_refined_grid, scan_grid
from .sharp import (
    SUPPORTED_PAIRS,
    ComparisonPair,
    CriticalExponentReport,
    Direction,
    NoRootError,
    c2_of_p,
    conjecture_scan,
    critical_exponent,
    endpoint_gap,
    restate_by_rescaling,
    sharpness_witness,
)
from .verify import (
    BUILTIN_CHAINS,
    ChainSpec,
    get_chain,
    mixed_log_partial,
    n_lower_bound_check,
    verify_chain,
    verify_monotonicity_in_p,
    witness_f,
    z_log_derivative,
)

__version__ = "0.1.0"
