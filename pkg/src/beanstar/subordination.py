"""Closed-form beta bounds for the two first-order differential subordinations.

For ``q(z) = ((1 + Az)/(1 + Bz))**gamma`` and

    h(z) = Theta(q(z)) + beta z q'(z) / q(z)**k

with ``Theta(w) = (1 - alpha) w + alpha w**2`` (mixed family) or
``Theta(w) = w**delta`` (power family), the bounds below are the sufficient
conditions on ``|beta|`` under which ``psi(p) < B`` forces ``p < q``.

:func:`verify_sufficiency` checks the condition the bounds are meant to
guarantee, ``|B^{-1}(h(e^{i theta}))| >= 1`` on a boundary grid.  It is a
check of that sufficient condition, not of the subordination itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import constants as K
from .complex_core import POLE_TOL
from .errors import ParameterError, SingularityError


@dataclass(frozen=True)
class BetaQuery:
    alpha: float = 0.0
    gamma: float = 1.0
    k: int = 0
    delta: int = 1
    A: float = 1.0
    B: float = 0.0

    def __post_init__(self):
        if not 0 <= self.alpha <= 1:
            raise ParameterError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not 0 < self.gamma <= 1:
            raise ParameterError(f"gamma must lie in (0, 1], got {self.gamma}")
        if self.k not in (-1, 0, 1):
            raise ParameterError(f"k must be -1, 0 or 1, got {self.k}")
        if self.delta not in (0, 1):
            raise ParameterError(f"delta must be 0 or 1, got {self.delta}")
        if not -1 < self.B < self.A <= 1:
            raise ParameterError(f"need -1 < B < A <= 1, got A={self.A}, B={self.B}")

    @property
    def is_sqrt_family(self) -> bool:
        """q(z) = sqrt(1 + z): gamma = 1/2, A = 1, B = 0."""
        return self.gamma == 0.5 and self.A == 1 and self.B == 0


def r0_constant() -> float:
    """e sqrt(2 / (1 + e^2)), the value B(1)."""
    return K.R0


def r0_predicate(w: complex) -> bool:
    """True iff |log(w**2 / (2 - w**2))| >= 2, i.e. w is outside B(D)."""
    w = complex(w)
    w2 = w * w
    if w == 0 or abs(w2 - 2) <= POLE_TOL:
        raise SingularityError(f"predicate undefined at w = {w}")
    return abs(np.log(w2 / (2 - w2))) >= 2


def log_modulus_sq(R: float, theta: float) -> float:
    """Squared modulus of log(w**2/(2 - w**2)) at w = R e^{i theta}, as a real expression."""
    re = math.log(R * R / math.sqrt(4 + R**4 - 4 * R * R * math.cos(2 * theta)))
    im = math.atan2(2 * math.sin(2 * theta) * R * R, 2 * R * R * math.cos(2 * theta) - R**4)
    return re * re + im * im


def _outer_factor(q: BetaQuery) -> float:
    e = q.gamma * (q.k - 1)
    return (1 + q.A) ** (e + 1) / ((1 + q.B) ** (e - 1) * q.gamma * (q.A - q.B))


def beta_bound_mixed(q: BetaQuery) -> float:
    """Lower bound on |beta| for (1 - alpha) p + alpha p**2 + beta z p' / p**k."""
    if q.k == 1:
        raise ParameterError("k = 1 is not admitted for the mixed family; use beta_bound_sqrt")
    ratio = (1 + q.A) / (1 + q.B)
    inner = K.R0 + q.alpha * ratio ** (2 * q.gamma) + (1 - q.alpha) * ratio**q.gamma
    return inner * _outer_factor(q)


def beta_bound_sqrt(alpha: float, k: int) -> float:
    """(R0 + 2 alpha + (1 - alpha) sqrt 2) 2^((k + 3)/2), for q = sqrt(1 + z)."""
    if not 0 <= alpha <= 1:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    if k not in (-1, 0, 1):
        raise ParameterError(f"k must be -1, 0 or 1, got {k}")
    return (K.R0 + 2 * alpha + (1 - alpha) * math.sqrt(2)) * 2 ** ((k + 3) / 2)


def beta_bound_power(q: BetaQuery) -> float:
    """Lower bound on |beta| for p**delta + beta z p' / p**k."""
    ratio = (1 + q.A) / (1 + q.B)
    return (K.R0 + ratio ** (q.delta * q.gamma)) * _outer_factor(q)


def dominant_boundary(beta: complex, q: BetaQuery, family: str, grid: int) -> np.ndarray:
    """h(e^{i theta}) on ``theta = 2 pi j / grid``."""
    if family not in ("mixed", "power"):
        raise ValueError(f"unknown family {family!r}")
    z = np.exp(2j * np.pi * np.arange(grid) / grid)
    g, A, B = q.gamma, q.A, q.B
    e = g * (q.k - 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        base = (1 + A * z) / (1 + B * z)
        qz = base**g
        Q = beta * g * (A - B) * z * (1 + B * z) ** (e - 1) / (1 + A * z) ** (e + 1)
        if family == "mixed":
            return (1 - q.alpha) * qz + q.alpha * qz * qz + Q
        return qz**q.delta + Q


def verify_sufficiency(beta: complex, q: BetaQuery, family: str = "mixed", grid: int = 1024) -> bool:
    """Check |B^{-1}(h(e^{i theta}))| >= 1 at every grid node.

    Nodes where h is infinite (the pole of Q at z = -1/A when A = 1) satisfy
    the condition in the limit and are skipped.
    """
    if not complex(beta).real > 0:
        raise ParameterError("need Re beta > 0")
    if grid < 64:
        raise ParameterError("grid must have at least 64 nodes")
    if family == "mixed" and q.k == 1 and not q.is_sqrt_family:
        raise ParameterError("k = 1 in the mixed family is only admitted for q = sqrt(1 + z)")
    h = dominant_boundary(beta, q, family, grid)
    h = h[np.isfinite(h)]
    h2 = h * h
    if np.any(h == 0) or np.any(np.abs(h2 - 2) <= POLE_TOL):
        raise SingularityError("h hits 0 or sqrt(2) on the grid")
    return bool(np.all(np.abs(np.log(h2 / (2 - h2))) >= 2))


def sample_queries(n: int, seed: int = 0):
    """``n`` random admissible ``(family, query)`` pairs over the full parameter ranges."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        family = "mixed" if rng.random() < 0.5 else "power"
        k = int(rng.choice([-1, 0])) if family == "mixed" else int(rng.choice([-1, 0, 1]))
        B = float(rng.uniform(-0.99, 0.99))
        A = float(rng.uniform(B + 1e-3, 1.0))
        gamma = float(1.0 - rng.random())  # (0, 1]
        q = BetaQuery(alpha=float(rng.random()), gamma=gamma, k=k, delta=int(rng.integers(0, 2)), A=A, B=B)
        out.append((family, q))
    return out


def bound_for(family: str, q: BetaQuery) -> float:
    return beta_bound_mixed(q) if family == "mixed" else beta_bound_power(q)
