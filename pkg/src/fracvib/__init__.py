"""Equivalent integer-order models of variable-order fractional vibrators.

>>> from fracvib import VibratorSpec, effective_params
>>> spec = VibratorSpec("VI", m=1, c=1, k=1, alpha=1.5, beta=1.0, lam=0.5)
>>> round(effective_params(spec, 1.0).c_eff, 5)
2.41421
"""

from .effective import (
    EffectiveParams,
    effective_damping,
    effective_mass,
    effective_params,
    effective_stiffness,
    spectral_polynomial,
)
from .errors import (
    ConfigError,
    FracVibError,
    MassNonPositive,
    NonFiniteResult,
    NonPositiveFrequency,
    NonzeroPrimaryDamping,
    OrderOutOfRange,
    OverCritical,
    ProfileSyntaxError,
    ResonanceSingular,
    RestrictionError,
    StiffnessZero,
    UnknownFigureId,
    UnknownIdentifier,
)
from .expr import ProfileExpr, evaluate, parse, to_string
from .model import (
    OrderProfile,
    VibratorClass,
    VibratorSpec,
    canonicalize,
    classical,
    validate,
)
from .rayleigh import RayleighDecomposition, rayleigh_coefficients
from .response import (
    FrequencyResponsePoint,
    InitialConditions,
    TimeSeries,
    free_response,
    impulse_response,
    transfer_function,
)
from .restricted import (
    RestrictedParams,
    Status,
    damped_frequency,
    damping_ratio,
    frequency_ratio,
    natural_frequency,
    restricted_params,
)

__version__ = "0.1.0"
