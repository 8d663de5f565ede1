"""Sharp B-radii for classical Ma-Minda and Janowski classes.

Each radius comes back as a :class:`RadiusResult` carrying a containment
certificate: the class's image disk (or image curve) at ``value * (1 - eps)``
must lie in B(D), and at ``value * (1 + eps)`` must not.  Those two flags are
computed, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from . import constants as K
from .complex_core import eval_bean
from .errors import DomainError, NoRootError, ParameterError
from .geometry import CURVE_SAMPLES, contains_curve, janowski_disk
from .solve import DEFAULT, SolveConfig, smallest_root

PROBE_EPS = 1e-3
ROOT_HI = 1.0 - 1e-9
E = math.e
SQ = math.sqrt(1 + E * E)


@dataclass(frozen=True)
class RadiusResult:
    value: float
    equation_id: str
    inner_ok: Optional[bool] = None
    outer_fail: Optional[bool] = None
    sharp: bool = True
    capped: bool = False
    params: Dict[str, float] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        """Both probe flags hold (outer only when the value is below 1)."""
        if self.inner_ok is not True:
            return False
        return self.outer_fail is not False

    def as_record(self, class_id: str) -> dict:
        d = asdict(self)
        return {
            "class_id": class_id,
            "parameters": d.pop("params"),
            "value": d.pop("value"),
            "equation_id": d.pop("equation_id"),
            "probes": {"inner_ok": self.inner_ok, "outer_fail": self.outer_fail},
            "sharp": self.sharp,
            "capped": self.capped,
        }


def _circle(samples: int = CURVE_SAMPLES) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(samples) / samples)


def disk_about_one(radius: float, samples: int = CURVE_SAMPLES) -> np.ndarray:
    return 1 + radius * _circle(samples)


def _probe(
    value: float,
    curve: Callable[[float], np.ndarray],
    inside: Callable[[np.ndarray], bool] = contains_curve,
    eps: float = PROBE_EPS,
):
    inner = inside(curve(value * (1 - eps))) if value > 0 else None
    r_out = value * (1 + eps)
    outer = (not inside(curve(r_out))) if value < 1 and r_out < 1 else None
    return inner, outer


def _result(value, equation_id, curve, params, sharp=True, capped=False, inside=contains_curve):
    inner, outer = _probe(value, curve, inside)
    return RadiusResult(value, equation_id, inner, outer, sharp, capped, params)


def _root_or_one(f, cfg: SolveConfig) -> float:
    try:
        return smallest_root(f, (0.0, ROOT_HI), cfg)
    except NoRootError:
        return 1.0


# Janowski class S*[A, B] and starlike of order alpha.

def janowski_radius_value(A: float, B: float) -> float:
    """Piecewise closed form; nonpositive denominators mean that constraint never binds."""
    d1 = A * SQ - math.sqrt(2) * E * B
    R1 = min(1.0, (math.sqrt(2) * E - SQ) / d1) if d1 > 0 else 1.0
    if B <= 0:
        return R1
    den = B * (math.sqrt(2 * (1 + E * E)) * A - B * E - B)
    R0p = math.sqrt((math.sqrt(2 * (1 + E * E)) - E - 1) / den) if den > 0 else math.inf
    if R1 <= R0p:
        return R1
    d2 = A * SQ - math.sqrt(2) * B
    return min(1.0, (SQ - math.sqrt(2)) / d2) if d2 > 0 else 1.0


def radius_janowski(A: float, B: float) -> RadiusResult:
    if not -1 <= B < A <= 1:
        raise ParameterError(f"need -1 <= B < A <= 1, got A={A}, B={B}")
    value = janowski_radius_value(A, B)

    def curve(r):
        return janowski_disk(A, B, r).circle()

    eq = "janowski_R1" if B <= 0 else "janowski_R1_R2"
    return _result(value, eq, curve, {"A": A, "B": B}, capped=value == 1.0)


def radius_starlike_alpha(alpha: float) -> RadiusResult:
    """S*(alpha) = S*[1 - 2 alpha, -1]."""
    if not 0 <= alpha < 1:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    res = radius_janowski(1 - 2 * alpha, -1.0)
    return RadiusResult(res.value, "starlike_alpha", res.inner_ok, res.outer_fail, True, res.capped, {"alpha": alpha})


# Exponential, sigmoid, lune and cardioid classes.

def radius_exp() -> RadiusResult:
    value = 1 + math.log(K.LEFT_END)
    return _result(value, "r_e", lambda r: disk_about_one(math.exp(r) - 1), {})


def radius_sg() -> RadiusResult:
    value = -math.log(math.sqrt(2 * (1 + E * E)) / E - 1)
    return _result(value, "r_sg", lambda r: 2 / (1 + np.exp(-r * _circle())), {})


def radius_lune() -> RadiusResult:
    value = (E * E - 1) / (2 * E * math.sqrt(2 * (E * E + 1)))
    return _result(value, "r_lune", lambda r: disk_about_one(r + math.sqrt(1 + r * r) - 1), {})


def radius_cardioid(cfg: SolveConfig = DEFAULT) -> RadiusResult:
    value = _root_or_one(lambda r: SQ * (1 + r * np.exp(r)) - math.sqrt(2) * E, cfg)
    return _result(value, "r_cardioid", lambda r: disk_about_one(r * math.exp(r)), {})


# Shifted lemniscate and exponential classes.

def radius_L_alpha(alpha: float) -> RadiusResult:
    """1 - ((sqrt(2/(1+e^2)) - alpha) / (1 - alpha))**2 on 0 <= alpha < sqrt(2/(1+e^2))."""
    if not 0 <= alpha < K.LEFT_END:
        raise DomainError(f"alpha must lie in [0, {K.LEFT_END:.6f}), got {alpha}")
    value = 1 - ((K.LEFT_END - alpha) / (1 - alpha)) ** 2
    return _result(value, "r_L_alpha", lambda r: alpha + (1 - alpha) * np.sqrt(1 + r * _circle()), {"alpha": alpha})


def radius_e_alpha(alpha: float) -> RadiusResult:
    """log((R0 - alpha) / (1 - alpha)), capped at 1."""
    if not 0 <= alpha < 1:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    raw = math.log((K.R0 - alpha) / (1 - alpha))
    value = min(raw, 1.0)
    return _result(
        value,
        "r_e_alpha",
        lambda r: alpha + (1 - alpha) * np.exp(r * _circle()),
        {"alpha": alpha},
        capped=raw > 1.0,
    )


# Booth lemniscate, cissoid and limacon classes.

def radius_BS(alpha: float) -> RadiusResult:
    """Positive root of r / (1 - alpha r^2) = R0 - 1.

    Written as 2m / (1 + sqrt(1 + 4 alpha m^2)) with m = R0 - 1, which is the
    rationalized quadratic-formula root and does not cancel as alpha -> 0.
    """
    if not 0 <= alpha < 1:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    m = K.R0 - 1
    value = 2 * m / (1 + math.sqrt(1 + 4 * alpha * m * m))
    return _result(value, "r_BS", lambda r: disk_about_one(r / (1 - alpha * r * r)), {"alpha": alpha})


def radius_cs(alpha: float, cfg: SolveConfig = DEFAULT) -> RadiusResult:
    if not 0 <= alpha < 1:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")

    def f(r):
        return (1 + E * E) * (1 + alpha * r - alpha * r * r) / ((1 - r) * (1 + alpha * r)) - E * math.sqrt(2 * (1 + E * E))

    value = _root_or_one(f, cfg)
    return _result(
        value,
        "r_cs",
        lambda r: disk_about_one(r / ((1 - r) * (1 + alpha * r))),
        {"alpha": alpha},
        capped=value == 1.0,
    )


def radius_limacon(s: float, cfg: SolveConfig = DEFAULT) -> RadiusResult:
    """min{1, r*} with r* the smallest positive root of (1+e^2)(1+sr)^2 = e sqrt(2(1+e^2)).

    The probe maps the actual limacon (1 + s r e^{i theta})**2.
    """
    if not (-1 <= s <= 1 and s != 0):
        raise DomainError(f"s must lie in [-1, 1] without 0, got {s}")
    value = _root_or_one(lambda r: (1 + E * E) * (1 + s * r) ** 2 - E * math.sqrt(2 * (1 + E * E)), cfg)
    return _result(value, "r_limacon", lambda r: (1 + s * r * _circle()) ** 2, {"s": s}, capped=value == 1.0)


# Radii for members of the bean class itself.

def convexity_alpha_equation(alpha: float, variant: str = "tan") -> Callable[[float], float]:
    """1 - tanh r - (alpha + r (1 + tan r) / (2 (1 - r^2)))**2; ``variant='tanh'`` swaps tan for tanh."""
    trig = {"tan": np.tan, "tanh": np.tanh}[variant]

    def f(r):
        return 1 - np.tanh(r) - (alpha + r * (1 + trig(r)) / (2 * (1 - r * r))) ** 2

    return f


def radius_convexity_alpha(alpha: float, variant: str = "tan", cfg: SolveConfig = DEFAULT) -> RadiusResult:
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if variant not in ("tan", "tanh"):
        raise ValueError("variant must be 'tan' or 'tanh'")
    value = _root_or_one(convexity_alpha_equation(alpha, variant), cfg)
    return RadiusResult(value, f"c_alpha_{variant}", None, None, sharp=False, params={"alpha": alpha})


def radius_starlike_alpha_within(alpha: float) -> RadiusResult:
    """Radius where Re(z f'/f) > alpha for every f in the bean class: log((2 - a^2)/a^2) / 2."""
    if not K.LEFT_END <= alpha <= 1:
        raise DomainError(f"alpha must lie in [{K.LEFT_END:.6f}, 1], got {alpha}")
    value = min(1.0, 0.5 * math.log((2 - alpha * alpha) / (alpha * alpha)))

    def curve(r):
        return eval_bean(r * _circle())

    def right_of_alpha(w):
        return bool(np.all(w.real > alpha))

    return _result(value, "starlike_within", curve, {"alpha": alpha}, inside=right_of_alpha)


CLASS_IDS = (
    "janowski",
    "starlike_alpha",
    "exp",
    "sg",
    "lune",
    "cardioid",
    "L_alpha",
    "e_alpha",
    "BS",
    "cs",
    "limacon",
    "convex_alpha",
    "starlike_within",
)


def catalog() -> List[dict]:
    """One export record per class at representative parameters."""
    entries = [
        ("janowski", radius_janowski(1.0, -1.0)),
        ("janowski", radius_janowski(0.8, 0.3)),
        ("starlike_alpha", radius_starlike_alpha(0.25)),
        ("exp", radius_exp()),
        ("sg", radius_sg()),
        ("lune", radius_lune()),
        ("cardioid", radius_cardioid()),
        ("L_alpha", radius_L_alpha(0.3)),
        ("e_alpha", radius_e_alpha(0.3)),
        ("BS", radius_BS(0.5)),
        ("cs", radius_cs(0.5)),
        ("limacon", radius_limacon(1.0)),
        ("convex_alpha", radius_convexity_alpha(0.5, "tan")),
        ("convex_alpha", radius_convexity_alpha(0.5, "tanh")),
        ("starlike_within", radius_starlike_alpha_within(0.7)),
    ]
    return [res.as_record(cid) for cid, res in entries]
