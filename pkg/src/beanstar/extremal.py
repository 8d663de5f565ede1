"""The extremal function f0(z) = z exp(int_0^z (B(t) - 1)/t dt) and its bounds.

Real values of f0 on [-1, 1] come from adaptive quadrature of the integrand
``(B(t) - 1)/t = tanh(t) / (t (1 + B(t)))``, which is smooth and has no
cancellation near 0.  Complex values use the truncated Taylor series and are
restricted to ``|z| <= 0.95`` with an explicit tail check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .complex_core import DEFAULT_DEGREE, PowerSeries, bean_series, eval_bean, series_exp_integrate
from .errors import DomainError, QuadratureError, SeriesAccuracyError
from .geometry import modulus_extremum_angle
from .solve import SolveConfig, extremize

QUAD_TOL = 1e-10
SERIES_TAIL_TOL = 1e-8
SERIES_MAX_RADIUS = 0.95


def f0_series(n: int = DEFAULT_DEGREE, exact: bool | None = None) -> PowerSeries:
    """Taylor coefficients of f0 through degree n + 1."""
    return series_exp_integrate(bean_series(n, exact))


@lru_cache(maxsize=None)
def _float_series(n: int) -> PowerSeries:
    return f0_series(n, exact=False)


def _log_integrand(t: float) -> float:
    if t == 0.0:
        return 0.5
    b = math.sqrt(2.0 / (1.0 + math.exp(-2.0 * t)))
    return math.tanh(t) / (t * (1.0 + b))


def log_f0_over_z(x: float, tol: float = QUAD_TOL) -> float:
    """int_0^x (B(t) - 1)/t dt by adaptive quadrature."""
    if not -1.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [-1, 1], got {x}")
    if x == 0.0:
        return 0.0
    value, err = quad(_log_integrand, 0.0, x, epsabs=tol, epsrel=0.0, limit=200)
    if not err <= tol:
        raise QuadratureError(f"quadrature error estimate {err:.3g} exceeds {tol:.3g}")
    return value


def f0_value(x: float, tol: float = QUAD_TOL) -> float:
    return x * math.exp(log_f0_over_z(x, tol))


def f0_derivative(x: float, tol: float = QUAD_TOL) -> float:
    """f0'(x) = f0(x) B(x) / x, with f0'(0) = 1."""
    if x == 0.0:
        return 1.0
    return math.exp(log_f0_over_z(x, tol)) * eval_bean(x).real


def f0_complex(z, degree: int = DEFAULT_DEGREE):
    """Series value of f0 at complex z with |z| <= 0.95.

    The tail is estimated as the difference to the degree-64 series on the
    circle |z| = max|z|; a :class:`SeriesAccuracyError` is raised above 1e-8.
    """
    z = np.asarray(z, dtype=complex)
    r = float(np.max(np.abs(z))) if z.size else 0.0
    if r > SERIES_MAX_RADIUS + 1e-12:
        raise DomainError(f"series evaluation is restricted to |z| <= {SERIES_MAX_RADIUS}")
    tail = series_tail(r, degree)
    if tail > SERIES_TAIL_TOL:
        raise SeriesAccuracyError(f"degree-{degree} tail {tail:.3g} exceeds {SERIES_TAIL_TOL:g} at r = {r}")
    return _float_series(degree)(z)


def series_tail(r: float, degree: int = DEFAULT_DEGREE) -> float:
    if r == 0:
        return 0.0
    z = r * np.exp(1j * np.linspace(0.0, np.pi, 257))
    return float(np.max(np.abs(_float_series(64)(z) - _float_series(degree)(z))))


@dataclass(frozen=True)
class GrowthRecord:
    r: float
    lower: float
    upper: float
    d_lower: float
    d_upper: float
    regime: str
    theta_max: float


def growth_distortion(r: float, cfg: SolveConfig = SolveConfig()) -> GrowthRecord:
    """Growth and distortion bounds for the bean class on |z| = r."""
    if not 0 < r < 1:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    upper = f0_value(r)
    lower = -f0_value(-r)
    d_lower = f0_derivative(-r)
    theta, interior = modulus_extremum_angle(r, cfg)
    # below the threshold theta = 0 and this is f0'(r)
    d_upper = abs(eval_bean(r * complex(math.cos(theta), math.sin(theta)))) * upper / r
    return GrowthRecord(
        r=r,
        lower=lower,
        upper=upper,
        d_lower=d_lower,
        d_upper=d_upper,
        regime="above_r0" if interior else "below_r0",
        theta_max=theta,
    )


def rotation_bound(r: float, degree: int = DEFAULT_DEGREE, cfg: SolveConfig = SolveConfig(tol=1e-12, scan_points=1024)) -> float:
    """max over theta of arg(f0(r e^{i theta}) / (r e^{i theta}))."""
    if not 0 < r <= SERIES_MAX_RADIUS:
        raise DomainError(f"r must lie in (0, {SERIES_MAX_RADIUS}], got {r}")
    tail = series_tail(r, degree)
    if tail > SERIES_TAIL_TOL:
        raise SeriesAccuracyError(f"degree-{degree} tail {tail:.3g} exceeds {SERIES_TAIL_TOL:g} at r = {r}")
    f = _float_series(degree)

    def arg(theta):
        z = r * np.exp(1j * theta)
        return np.angle(f(z) / z)

    return extremize(arg, (0.0, math.pi), "max", cfg)[1]


def covering_radius(tol: float = QUAD_TOL) -> float:
    """-f0(-1): every function in the class covers the disk of this radius."""
    return -f0_value(-1.0, tol)
