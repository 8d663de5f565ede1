"""Numerics for the bean function B(z) = sqrt(1 + tanh z) and its starlike class."""

from .complex_core import PowerSeries, bean_derivative, bean_series, eval_bean, inverse_bean, series_exp_integrate
from .constants import ALPHA0, CASSINIAN_C, KST_K, LEFT_END, R0, R_ALPHA0
from .errors import (
    BeanError,
    DomainError,
    MultiplicityError,
    NoRootError,
    ParameterError,
    QuadratureError,
    SeriesAccuracyError,
    SingularityError,
)
from .geometry import (
    BoundSet,
    Disk,
    boundary_curve,
    contains_curve,
    convexity_radius,
    janowski_subordination_test,
    sharp_bounds,
)
from .radii import CLASS_IDS, RadiusResult, catalog
from .solve import SolveConfig, extremize, smallest_root
from .subordination import BetaQuery, beta_bound_mixed, beta_bound_power, beta_bound_sqrt, verify_sufficiency

__version__ = "0.1.0"
