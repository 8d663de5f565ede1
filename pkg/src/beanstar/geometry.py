"""Boundary curve of B(D_r), its sharp bounds, inscribed and enclosing disks, and inclusion tests.

On ``|z| = r`` write ``z = r e^{i theta}`` and

    M = exp(2 r cos theta) + cos(2 r sin theta)
    N = sin(2 r sin theta)
    S = sqrt(M**2 + N**2)

Then ``B(z) = exp(r cos theta) (M + S + i N) / (S sqrt(M + S))``.  Everything
below is expressed on the half circle ``theta in [0, pi]``; the image is
symmetric about the real axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Tuple

import numpy as np

from . import constants as K
from .complex_core import eval_bean, inverse_bean
from .errors import DomainError, MultiplicityError, ParameterError
from .solve import DEFAULT, SolveConfig, extremize, sample, smallest_root

PI = math.pi

#: Default number of boundary samples for curve probes.
CURVE_SAMPLES = 2048


@dataclass(frozen=True)
class BoundaryPoint:
    theta: float
    M: float
    N: float
    T: float
    w: complex


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius >= 0:
            raise ValueError("disk radius must be nonnegative")

    def circle(self, samples: int = CURVE_SAMPLES) -> np.ndarray:
        t = 2 * PI * np.arange(samples) / samples
        return self.center + self.radius * np.exp(1j * t)


@dataclass(frozen=True)
class BoundSet:
    re_min: float
    re_max: float
    im_abs_max: float
    mod_min: float
    mod_max: float
    arg_abs_max: float
    theta0: float  # argmax of Re
    theta1: float  # argmax of Im
    theta2: float  # argmax of modulus
    theta_arg: float

    @property
    def beta(self) -> float:
        """Strongly-starlike order: arg_abs_max / (pi / 2)."""
        return self.arg_abs_max / (PI / 2)


def _mn(r, theta):
    c, s = np.cos(theta), np.sin(theta)
    M = np.exp(2 * r * c) + np.cos(2 * r * s)
    N = np.sin(2 * r * s)
    return M, N


def polar_bean(r, theta):
    """Closed polar form of B(r e^{i theta}); vectorized over theta."""
    M, N = _mn(r, theta)
    S = np.hypot(M, N)
    return np.exp(r * np.cos(theta)) * (M + S + 1j * N) / (S * np.sqrt(M + S))


def boundary_point(r: float, theta: float) -> BoundaryPoint:
    if not 0 < r <= 1:
        raise DomainError(f"radius must lie in (0, 1], got {r}")
    M, N = _mn(r, theta)
    return BoundaryPoint(
        theta=float(theta),
        M=float(M),
        N=float(N),
        T=0.5 * math.atan2(float(N), float(M)),
        w=complex(polar_bean(r, theta)),
    )


def boundary_curve(r: float = 1.0, samples: int = CURVE_SAMPLES) -> Tuple[np.ndarray, np.ndarray]:
    """``(theta, w)`` on ``theta = 2 pi k / samples``, increasing over [0, 2 pi)."""
    if not 0 < r <= 1:
        raise DomainError(f"radius must lie in (0, 1], got {r}")
    theta = 2 * PI * np.arange(samples) / samples
    return theta, polar_bean(r, theta)


# Unit-circle functionals (r = 1).

def re_part(theta):
    M, N = _mn(1.0, theta)
    S = np.hypot(M, N)
    return np.exp(np.cos(theta)) * np.sqrt(M + S) / S


def im_part(theta):
    M, N = _mn(1.0, theta)
    S = np.hypot(M, N)
    return np.exp(np.cos(theta)) * N / (S * np.sqrt(M + S))


def mod_sq(theta):
    M, N = _mn(1.0, theta)
    return 2 * np.exp(2 * np.cos(theta)) / np.hypot(M, N)


def arg_part(theta):
    return np.angle(polar_bean(1.0, theta))


def parabolic_T(theta):
    """Im(B)**2 / (4 Re(B)) on the unit circle."""
    M, N = _mn(1.0, theta)
    S = np.hypot(M, N)
    return np.exp(np.cos(theta)) * N**2 / (4 * S * (M + S) ** 1.5)


def sharp_bounds(cfg: SolveConfig = SolveConfig(scan_points=8192)) -> BoundSet:
    half = (0.0, PI)
    _, re_min = extremize(re_part, half, "min", cfg)
    t0, re_max = extremize(re_part, half, "max", cfg)
    t1, im_max = extremize(im_part, half, "max", cfg)
    _, a_min = extremize(mod_sq, half, "min", cfg)
    t2, a_max = extremize(mod_sq, half, "max", cfg)
    ta, arg_max = extremize(arg_part, half, "max", cfg)
    return BoundSet(
        re_min=re_min,
        re_max=re_max,
        im_abs_max=im_max,
        mod_min=math.sqrt(a_min),
        mod_max=math.sqrt(a_max),
        arg_abs_max=arg_max,
        theta0=t0,
        theta1=t1,
        theta2=t2,
        theta_arg=ta,
    )


def convexity_numerator(r, t):
    """Numerator of Re(1 + z B''/B') at z = r e^{it}; its sign decides convexity."""
    c, s = np.cos(t), np.sin(t)
    return (
        1
        + r * c
        + np.exp(4 * r * c) * (1 - 2 * r * c)
        + np.exp(2 * r * c) * (2 * np.cos(2 * r * s) + r * (np.cos(t - 2 * r * s) - 2 * np.cos(t + 2 * r * s)))
    )


def convexity_radius(cfg: SolveConfig = DEFAULT) -> float:
    """Smallest positive root of 1 + 2e^{2r} + e^{4r} - (-1 + e^{2r} + 2e^{4r}) r."""

    def g(r):
        e2, e4 = np.exp(2 * r), np.exp(4 * r)
        return 1 + 2 * e2 + e4 - (-1 + e2 + 2 * e4) * r

    return smallest_root(g, (1e-12, 1.0), cfg)


def _check_center(alpha: float) -> None:
    if not K.LEFT_END < alpha < K.R0:
        raise DomainError(f"center must lie strictly between {K.LEFT_END:.6f} and {K.R0:.6f}, got {alpha}")


def inscribed_radius(alpha: float) -> float:
    """Radius of the largest disk centered at real ``alpha`` inside B(D)."""
    _check_center(alpha)
    if alpha <= K.ALPHA0:
        return alpha - K.LEFT_END
    return K.R0 - alpha


def distance_sq_to_boundary(alpha: float, theta):
    """|B(e^{i theta}) - alpha|**2 written in the M, N form."""
    M, N = _mn(1.0, theta)
    S2 = M**2 + N**2
    S = np.sqrt(S2)
    ec = np.exp(np.cos(theta))
    return ec**2 * N**2 / (S2 * (M + S)) + (alpha - ec * np.sqrt(M + S) / S) ** 2


def farthest_boundary_point(alpha: float, cfg: SolveConfig = DEFAULT) -> Tuple[float, float]:
    """``(theta_alpha, sqrt(d(theta_alpha)))`` for the interior maximizer of d.

    Raises :class:`MultiplicityError` when the scan sees more than one
    interior critical point of d.
    """
    _check_center(alpha)

    def d(t):
        return distance_sq_to_boundary(alpha, t)

    y = sample(d, np.linspace(0.0, PI, cfg.scan_points + 1))
    slope = np.sign(np.diff(y))
    slope = slope[slope != 0]
    turns = int(np.count_nonzero(slope[1:] != slope[:-1]))
    if turns > 1:
        raise MultiplicityError(f"d has {turns} interior critical points for alpha = {alpha}")
    theta, dmax = extremize(d, (0.0, PI), "max", cfg)
    return theta, math.sqrt(dmax)


def enclosing_radius(alpha: float, cfg: SolveConfig = DEFAULT) -> float:
    """Radius of the smallest disk centered at real ``alpha`` containing B(D)."""
    return farthest_boundary_point(alpha, cfg)[1]


def minimax_enclosing_disk(cfg: SolveConfig = DEFAULT) -> Disk:
    """Smallest enclosing disk of B(D) among disks with real centers."""
    outer = SolveConfig(tol=cfg.tol, scan_points=64)
    lo, hi = K.LEFT_END + 1e-9, K.R0 - 1e-9
    center, radius = extremize(lambda a: enclosing_radius(a, cfg), (lo, hi), "min", outer)
    return Disk(center, radius)


def janowski_disk(A: float, B: float, r: float = 1.0) -> Disk:
    """Image of |z| < r under (1 + A z) / (1 + B z)."""
    den = 1 - B * B * r * r
    return Disk((1 - A * B * r * r) / den, (A - B) * r / den)


def janowski_subordination_test(A: float, B: float) -> bool:
    """Whether (1 + Az)/(1 + Bz) is subordinate to B(z), for -1 < B < A <= 1."""
    if not -1 < B < A <= 1:
        raise ParameterError(f"need -1 < B < A <= 1, got A={A}, B={B}")
    c = (1 - A * B) / (1 - B * B)
    if c <= K.ALPHA0:
        return A <= 1 - K.LEFT_END * (1 - B)
    return A <= K.R0 * (1 + B) - 1


def contains_curve(samples: Iterable[complex]) -> bool:
    """True iff every sample w satisfies |B^{-1}(w)| < 1, i.e. lies in B(D)."""
    w = np.asarray(list(samples) if not isinstance(samples, np.ndarray) else samples, dtype=complex)
    if w.size == 0:
        raise ValueError("need at least one sample")
    return bool(np.all(np.abs(inverse_bean(w.ravel())) < 1.0))


def cassinian_curve(c: float, samples: int = CURVE_SAMPLES) -> np.ndarray:
    """Boundary sqrt(1 + c e^{i theta}) of the right Cassinian loop."""
    t = 2 * PI * np.arange(samples) / samples
    return np.sqrt(1 + c * np.exp(1j * t))


@dataclass(frozen=True)
class InclusionThresholds:
    starlike_order: float
    reciprocal_order_bound: float
    strongly_starlike_order: float
    parabolic_rho: float
    parabolic_theta: float
    kst_k: float
    cassinian_c: float
    exp_inclusion: bool


def inclusion_thresholds(cfg: SolveConfig = SolveConfig(scan_points=8192)) -> InclusionThresholds:
    bounds = sharp_bounds(cfg)
    t_rho, rho = extremize(parabolic_T, (0.0, PI), "max", cfg)
    # B(D) sits inside |w - 1| < e - 1, the largest disk about 1 in exp(D).
    exp_ok = enclosing_radius(1.0, cfg) < math.e - 1
    return InclusionThresholds(
        starlike_order=bounds.re_min,
        reciprocal_order_bound=bounds.re_max,
        strongly_starlike_order=bounds.beta,
        parabolic_rho=rho,
        parabolic_theta=t_rho,
        kst_k=K.KST_K,
        cassinian_c=K.CASSINIAN_C,
        exp_inclusion=exp_ok,
    )


def g_r(r: float, theta):
    """|B(r e^{i theta})|**2."""
    c = np.cos(theta)
    e2 = np.exp(2 * r * c)
    return 2 * e2 / np.sqrt(1 + e2 * e2 + 2 * e2 * np.cos(2 * r * np.sin(theta)))


def h_r(r: float, theta):
    """Sign-carrying factor of g_r'(theta); its zeros are the critical points."""
    s, c = np.sin(theta), np.cos(theta)
    e2 = np.exp(2 * r * c)
    return s + e2 * np.cos(2 * r * s) * s - e2 * np.sin(2 * r * s) * c


def theta_zero_curvature(r):
    """Sign of d^2/dtheta^2 g_r at theta = 0, up to a positive factor.

    Negative means theta = 0 has turned into a local minimum of |B(r e^{i theta})|.
    """
    return 1 + np.exp(2 * r) * (1 - 2 * r)


def distortion_threshold(cfg: SolveConfig = DEFAULT) -> float:
    """Radius at which the maximizer of |B(r e^{i theta})| leaves theta = 0."""
    return smallest_root(theta_zero_curvature, (0.5, 0.8), cfg)


def modulus_extremum_angle(r: float, cfg: SolveConfig = DEFAULT) -> Tuple[float, bool]:
    """Angle maximizing |B(r e^{i theta})| and whether it is interior to (0, pi)."""
    if not 0 < r < 1:
        raise DomainError(f"radius must lie in (0, 1), got {r}")
    interior = bool(theta_zero_curvature(r) < 0)
    theta, _ = extremize(lambda t: g_r(r, t), (0.0, PI), "max", cfg)
    return theta, interior


def interior_root_flag(r: float, scan_points: int = 4096) -> bool:
    """Whether h_r changes sign on a grid of the open interval (0, pi)."""
    x = np.linspace(0.0, PI, scan_points + 1)[1:-1]
    y = h_r(r, x)
    return bool(np.any(np.sign(y[1:]) != np.sign(y[:-1])))


def curve_rows(r: float, samples: int) -> List[Tuple[float, float, float]]:
    """(theta, re, im) triples of the boundary of B(D_r), for export."""
    theta, w = boundary_curve(r, samples)
    return [(float(t), float(v.real), float(v.imag)) for t, v in zip(theta, w)]


def unit_circle_bean(samples: int = CURVE_SAMPLES) -> np.ndarray:
    """Direct evaluation of B on the unit circle, for cross-checks."""
    t = 2 * PI * np.arange(samples) / samples
    return eval_bean(np.exp(1j * t))
