"""Weighted sequence spaces, shift spectra, and symbol bounds at desk scale."""

__version__ = "0.1.0"

from .errors import (
    BandExceedsBlackBox,
    BandwidthExceedsWindow,
    BothShiftsUnbounded,
    ConfigParseError,
    ConfigValidationError,
    InvalidSpaceParams,
    MatrixTooLargeForOracle,
    MethodSpaceMismatch,
    ModularDivergesForAllT,
    NegativeSupportInput,
    NonUnimodularZ,
    SupportOutsideWindow,
    ToolkitError,
    UnboundedShift,
    WindowTooSmall,
    ZeroWithNegativePowers,
)
from .spaces import (
    ExponentMap,
    FourierSupSpace,
    IntersectionSpace,
    LpSpace,
    OrliczFunction,
    OrliczSpace,
    SeqWindow,
    VarExpSpace,
    Weight,
    WeightTag,
    apply_modulation,
    luxemburg_norm,
    make_weight,
    norm,
)
from .shift_spectrum import (
    Annulus,
    BoundednessVerdict,
    NormEstimate,
    classify_boundedness,
    shift_apply,
    shift_power_norm,
    spectral_radius,
    spectrum_annulus,
)
from .multiplier import (
    BoundReport,
    FiniteSection,
    FiniteSymbol,
    cesaro_mean,
    check_symbol_bound,
    convolve,
    fejer_approximant,
    fejer_coefficients,
    multiplier_finite_section,
    multiplier_norm_bounds,
    onesidedness_check,
    operator_norm,
    symbol_eval,
    symbol_sup_on_circle,
)
from .toeplitz import (
    IdentityCheck,
    ToeplitzOp,
    check_toeplitz_bound,
    check_toeplitz_identity,
    extract_symbol_coeffs,
    project_plus,
    toeplitz_apply,
    toeplitz_finite_section,
    toeplitz_norm_bounds,
    toeplitz_region,
)
from .oracle import naive_convolve, naive_operator_norm, windowed_ratio_sup
from .config import ScenarioConfig, parse_config, serialize_config
from .runner import RunReport, emit_outputs, resolve_radii, run_scenario
