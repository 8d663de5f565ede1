"""Bracketed root finding and 1D extremization on closed intervals.

Both routines scan a uniform grid first and then refine locally, which is
robust for the transcendental equations used throughout the package and is
deterministic for a fixed configuration.  The scan tries to call ``f`` once
on the whole node array; functions that cannot take arrays are evaluated
node by node.  The reduction is over indexed cells, so both paths give the
same answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np

from .errors import NoRootError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("interval ends must be finite")
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class SolveConfig:
    tol: float = 1e-12
    scan_points: int = 4096

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.scan_points < 16:
            raise ValueError("scan_points must be at least 16")

    def doubled(self) -> SolveConfig:
        return SolveConfig(self.tol, 2 * self.scan_points)


DEFAULT = SolveConfig()

IntervalLike = Union[Interval, Tuple[float, float]]


def _as_interval(iv: IntervalLike) -> Interval:
    return iv if isinstance(iv, Interval) else Interval(float(iv[0]), float(iv[1]))


def _nodes(iv: Interval, n: int) -> np.ndarray:
    x = iv.lo + (iv.hi - iv.lo) * np.arange(n + 1) / n
    x[-1] = iv.hi
    return x


def sample(f: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on every node, vectorized when ``f`` allows it."""
    try:
        with np.errstate(all="ignore"):
            y = f(x)
        y = np.asarray(y, dtype=float)
        if y.shape == x.shape:
            return y
    except (TypeError, ValueError):
        pass
    return np.array([f(float(t)) for t in x], dtype=float)


def _bisect(f, a, b, fa, tol):
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def golden_max(f: Callable, a: float, b: float, xtol: float) -> Tuple[float, float]:
    """Golden-section search for a maximum of a unimodal ``f`` on [a, b]."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def smallest_root(f: Callable[[float], float], iv: IntervalLike, cfg: SolveConfig = DEFAULT) -> float:
    """Leftmost zero of ``f`` on ``iv``.

    A uniform scan locates the first exact zero or sign change, which is then
    bisected to ``cfg.tol``.  If ``f`` never changes sign but touches zero,
    the leftmost local minimum of ``|f|`` is refined by golden section and
    accepted when its value is within ``cfg.tol``.
    """
    iv = _as_interval(iv)
    x = _nodes(iv, cfg.scan_points)
    y = sample(f, x)
    finite = np.isfinite(y)
    for i in range(len(x) - 1):
        if not finite[i]:
            continue
        if y[i] == 0.0:
            return float(x[i])
        if finite[i + 1] and (y[i] < 0.0) != (y[i + 1] < 0.0) and y[i + 1] != 0.0:
            return float(_bisect(f, float(x[i]), float(x[i + 1]), float(y[i]), cfg.tol))
    if finite[-1] and y[-1] == 0.0:
        return float(x[-1])

    a = np.where(finite, np.abs(y), np.inf)
    for i in range(len(x)):
        left = a[i - 1] if i > 0 else np.inf
        right = a[i + 1] if i + 1 < len(x) else np.inf
        if a[i] <= left and a[i] <= right and np.isfinite(a[i]):
            lo = float(x[max(i - 1, 0)])
            hi = float(x[min(i + 1, len(x) - 1)])
            t, v = golden_max(lambda s: -abs(f(s)), lo, hi, cfg.tol)
            if -v <= cfg.tol:
                return float(t)
    raise NoRootError(f"no root of f on [{iv.lo}, {iv.hi}]")


def extremize(
    f: Callable[[float], float],
    iv: IntervalLike,
    sense: str = "max",
    cfg: SolveConfig = DEFAULT,
) -> Tuple[float, float]:
    """Return ``(arg, value)`` of the global max (or min) of ``f`` on ``iv``.

    The best scan node wins, ties going to the smaller argument; golden
    section then refines inside the two neighbouring cells.  The argument
    is resolved to about ``sqrt(cfg.tol)`` and the value to ``cfg.tol``.
    Minimization is maximization of ``-f``, so ``extremize(f, 'max')`` and
    ``extremize(-f, 'min')`` return the same argument.
    """
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    iv = _as_interval(iv)
    sign = 1.0 if sense == "max" else -1.0

    def g(t):
        return sign * f(t)

    x = _nodes(iv, cfg.scan_points)
    y = sign * sample(f, x)
    y = np.where(np.isfinite(y), y, -np.inf)
    i = int(np.argmax(y))  # first occurrence -> smaller argument on ties
    best_t, best_v = float(x[i]), float(y[i])
    lo = float(x[max(i - 1, 0)])
    hi = float(x[min(i + 1, len(x) - 1)])
    t, v = golden_max(g, lo, hi, math.sqrt(cfg.tol))
    if v > best_v:
        best_t, best_v = float(t), float(v)
    return best_t, sign * best_v
