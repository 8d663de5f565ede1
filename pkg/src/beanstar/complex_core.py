"""Evaluation of the bean function, its inverse, and truncated power series.

The bean function is

    B(z) = sqrt(1 + tanh z) = sqrt(2 / (1 + exp(-2 z)))

which maps the unit disk onto ``{w : |log(w**2 / (2 - w**2))| < 2}``.  Its
inverse on that region is ``B^{-1}(w) = log(w**2 / (2 - w**2)) / 2``.

Principal branches are used for both square root and logarithm.  The image of
the closed unit disk stays in the open right half-plane, so the square-root
cut is never crossed; :func:`eval_bean` asserts this.

Power series are kept as plain coefficient lists.  Coefficients may be
:class:`fractions.Fraction` (exact mode) or float/complex; every operation
preserves the coefficient type it is given.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Sequence

import numpy as np

from .errors import DomainError, SingularityError

#: Slack allowed on |z| <= 1 before eval_bean refuses the argument.
DISK_SLACK = 1e-9

#: Highest degree handled with exact rational coefficients by default.
EXACT_MAX_DEGREE = 12

#: Default truncation degree for series consumers.
DEFAULT_DEGREE = 32

MAX_DEGREE = 64

# |w**2 - 2| below this counts as hitting the pole; sqrt(2)**2 is off by one ulp
POLE_TOL = 8 * np.finfo(float).eps


def eval_bean(z):
    """Evaluate B(z) = sqrt(2 / (1 + exp(-2z))) on the closed unit disk.

    Accepts a scalar or an array; scalars come back as Python ``complex``.
    Raises :class:`DomainError` when ``|z| > 1 + 1e-9``.

    >>> eval_bean(0)
    (1+0j)
    """
    if np.ndim(z) == 0:
        z = complex(z)
        if abs(z) > 1.0 + DISK_SLACK:
            raise DomainError(f"|z| = {abs(z):.6g} exceeds the closed unit disk")
        w = cmath.sqrt(2.0 / (1.0 + cmath.exp(-2.0 * z)))
        if not (math.isfinite(w.real) and math.isfinite(w.imag)):
            raise DomainError(f"non-finite bean value at z = {z}")
        assert w.real > 0.0, "bean image left the right half-plane"
        return w
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1.0 + DISK_SLACK):
        raise DomainError("some |z| exceed the closed unit disk")
    w = np.sqrt(2.0 / (1.0 + np.exp(-2.0 * z)))
    if not np.all(np.isfinite(w)):
        raise DomainError("non-finite bean value")
    return w


def inverse_bean(w):
    """Return log(w**2 / (2 - w**2)) / 2 (principal log).

    Raises :class:`SingularityError` at ``w = 0`` or ``w**2 = 2``.
    """
    if np.ndim(w) == 0:
        w = complex(w)
        w2 = w * w
        if w == 0 or abs(w2 - 2) <= POLE_TOL:
            raise SingularityError(f"inverse bean map is singular at w = {w}")
        return 0.5 * cmath.log(w2 / (2.0 - w2))
    w = np.asarray(w, dtype=complex)
    w2 = w * w
    if np.any(w == 0) or np.any(np.abs(w2 - 2) <= POLE_TOL):
        raise SingularityError("inverse bean map is singular at some sample")
    return 0.5 * np.log(w2 / (2.0 - w2))


def bean_derivative(z):
    """B'(z) = (1 - tanh z) B(z) / 2."""
    return (1.0 - np.tanh(z)) * eval_bean(z) / 2.0


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Taylor series ``c0 + c1 t + ... + cN t**N`` about 0.

    Arithmetic truncates to the smaller order of the operands and never
    looks past index ``order``.
    """

    coeffs: tuple

    def __init__(self, coeffs: Sequence[Number]):
        if len(coeffs) == 0:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return PowerSeries([sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n + 1)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c / other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        if b[0] == 0:
            raise ZeroDivisionError("divisor series has zero constant term")
        q = []
        for m in range(n + 1):
            q.append((a[m] - sum(b[k] * q[m - k] for k in range(1, m + 1))) / b[0])
        return PowerSeries(q)

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """Return ``self(inner(t))``; ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must vanish at 0")
        n = min(self.order, inner.order)
        zero = inner.coeffs[0] * 0
        out = PowerSeries([self.coeffs[n]] + [zero] * n)
        inner = inner.truncate(n)
        for c in reversed(self.coeffs[:n]):
            out = out * inner + c
        return out

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            return PowerSeries([self.coeffs[0] * 0])
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def integrate(self) -> PowerSeries:
        """Antiderivative vanishing at 0; the order goes up by one."""
        zero = self.coeffs[0] * 0
        return PowerSeries([zero] + [_div(c, k + 1) for k, c in enumerate(self.coeffs)])

    def shift_down(self) -> PowerSeries:
        """Divide by t; requires a zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("series does not vanish at 0")
        if self.order == 0:
            return PowerSeries([self.coeffs[0]])
        return PowerSeries(self.coeffs[1:])

    def exp(self) -> PowerSeries:
        """exp of a series with zero constant term, via n g_n = sum k h_k g_{n-k}."""
        h = self.coeffs
        if h[0] != 0:
            raise ValueError("exp is only taken of series vanishing at 0")
        g = [h[0] * 0 + 1]
        for n in range(1, self.order + 1):
            g.append(_div(sum(k * h[k] * g[n - k] for k in range(1, n + 1)), n))
        return PowerSeries(g)

    def to_float(self) -> PowerSeries:
        return PowerSeries([complex(c) if isinstance(c, complex) else float(c) for c in self.coeffs])

    def __call__(self, z):
        """Horner evaluation; works on scalars and numpy arrays."""
        acc = self.coeffs[-1] * (z * 0 + 1) if isinstance(z, np.ndarray) else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc


def _div(a, n: int):
    if isinstance(a, (int, Fraction)):
        return Fraction(a) / n
    return a / n


def _tanh_series(n: int, exact: bool) -> PowerSeries:
    one = Fraction(1) if exact else 1.0
    sinh = [one / math.factorial(k) if k % 2 else 0 * one for k in range(n + 1)]
    cosh = [0 * one if k % 2 else one / math.factorial(k) for k in range(n + 1)]
    return PowerSeries(sinh) / PowerSeries(cosh)


def _sqrt1p_series(n: int, exact: bool) -> PowerSeries:
    """Binomial series of sqrt(1 + w)."""
    half = Fraction(1, 2) if exact else 0.5
    c = [half * 0 + 1]
    for k in range(1, n + 1):
        c.append(c[-1] * (half - (k - 1)) / k)
    return PowerSeries(c)


def bean_series(n: int = DEFAULT_DEGREE, exact: bool | None = None) -> PowerSeries:
    """Taylor coefficients of B about 0 through degree ``n``.

    Built as sqrt(1 + w) composed with w = tanh z.  Rational arithmetic is
    used when ``exact`` is true; by default that is the case for
    ``n <= 12`` and floats are used above.
    """
    if not 0 <= n <= MAX_DEGREE:
        raise DomainError(f"degree must lie in [0, {MAX_DEGREE}], got {n}")
    if exact is None:
        exact = n <= EXACT_MAX_DEGREE
    if n == 0:
        return PowerSeries([Fraction(1) if exact else 1.0])
    return _sqrt1p_series(n, exact).compose(_tanh_series(n, exact))


def series_exp_integrate(p: PowerSeries) -> PowerSeries:
    """Series of ``z * exp(int_0^z (p(t) - 1) / t dt)``, truncated to order p.order + 1."""
    c0 = p.coeffs[0]
    if isinstance(c0, (int, Fraction)):
        ok = c0 == 1
    else:
        ok = abs(c0 - 1) <= 1e-14
    if not ok:
        raise ValueError(f"constant term must be 1, got {c0}")
    zero = c0 * 0
    if p.order == 0:
        return PowerSeries([zero, zero + 1])
    integrand = PowerSeries([zero] + list(p.coeffs[1:])).shift_down()
    g = integrand.integrate().exp()
    return PowerSeries([zero] + list(g.coeffs))
