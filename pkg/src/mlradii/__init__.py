"""Radii of starlikeness and convexity for normalized three-parameter
Mittag-Leffler (Prabhakar) functions."""

from .bounds import (
    BoundsResult,
    RayleighSums,
    bounds,
    closed_form_sums,
    convex_bounds,
    euler_rayleigh_bracket,
    radius_bounds,
    rayleigh_sums,
    starlike_bounds,
)
from .domain import (
    PlanePoint,
    Transform,
    WiStatus,
    WiVerdict,
    apply_transform,
    in_wa,
    in_wb,
    in_wi,
    wb_beta_intervals,
    wi_status_for,
)
from .errors import (
    CoefficientOverflow,
    ComputationError,
    DomainError,
    InvalidQuery,
    MaxScanExceeded,
    MLRadiiError,
    NonConvergence,
    PrecisionLoss,
    UnresolvedBracket,
    Unsupported,
)
from .oracles import closed_form_phi, reference_root
from .radii import (
    Kind,
    Normalization,
    RadiusQuery,
    RadiusResult,
    curvature,
    radius,
    solve_radius,
    star_quotient,
)
from .special import (
    EvalResult,
    FunctionId,
    MLParams,
    eval_lambda,
    eval_lambda_prime,
    evaluate,
    ln_gamma,
    pochhammer,
    series_coefficients,
)
from .zeros import ZeroSequence, check_interlacing, find_zeros, weierstrass_product

__version__ = "0.1.0"
