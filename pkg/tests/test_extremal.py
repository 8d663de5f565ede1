import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beanstar import extremal as X
from beanstar.complex_core import eval_bean
from beanstar.errors import DomainError, SeriesAccuracyError
from beanstar.geometry import distortion_threshold


def test_f0_series_coefficients():
    assert list(X.f0_series(4)) == [0, 1, F(1, 2), F(1, 16), F(-13, 288), F(-11, 1152)]
    assert X.f0_series(5)[5] == F(-11, 1152)
    assert list(X.f0_series(1)) == [0, 1, F(1, 2)]


def test_f0_value_examples():
    assert X.f0_value(0) == 0
    series = X.f0_series(12)
    assert X.f0_value(0.1) == pytest.approx(float(series(F(1, 10))), abs=1e-10)
    assert X.f0_value(-1) < 0


@settings(max_examples=40, deadline=None)
@given(st.floats(-0.5, 0.5))
def test_quadrature_matches_series(x):
    assert X.f0_value(x) == pytest.approx(float(X.f0_series(32, exact=False)(x)), abs=1e-10)


def test_log_derivative_identity():
    # x f0'/f0 = B(x)
    for x in (-0.9, -0.3, 0.4, 0.95):
        assert x * X.f0_derivative(x) / X.f0_value(x) == pytest.approx(eval_bean(x).real, rel=1e-12)


def test_f0_value_domain():
    with pytest.raises(DomainError):
        X.f0_value(1.5)


def test_f0_complex_matches_series_and_checks_tail():
    z = 0.5 * np.exp(1j * np.linspace(0, 3, 7))
    direct = X._float_series(64)(z)
    assert np.max(np.abs(X.f0_complex(z) - direct)) < 1e-8
    with pytest.raises(DomainError):
        X.f0_complex(0.99)
    with pytest.raises(SeriesAccuracyError):
        X.f0_complex(0.95, degree=8)


def test_growth_small_r():
    rec = X.growth_distortion(1e-5)
    assert rec.lower / rec.r == pytest.approx(1, abs=1e-5)
    assert rec.upper / rec.r == pytest.approx(1, abs=1e-5)


def test_growth_regimes():
    below = X.growth_distortion(0.5)
    assert below.regime == "below_r0" and below.theta_max == 0
    assert below.d_upper == pytest.approx(X.f0_derivative(0.5), rel=1e-12)
    above = X.growth_distortion(0.8)
    assert above.regime == "above_r0" and 0 < above.theta_max < math.pi
    expected = abs(eval_bean(0.8 * np.exp(1j * above.theta_max))) * X.f0_value(0.8) / 0.8
    assert above.d_upper == pytest.approx(expected, rel=1e-12)
    assert above.d_upper > X.f0_derivative(0.8)


@settings(max_examples=15, deadline=None)
@given(st.floats(0.01, 0.99))
def test_growth_ordering(r):
    rec = X.growth_distortion(r)
    assert 0 < rec.lower < r < rec.upper
    assert rec.d_lower < 1 < rec.d_upper


def test_distortion_bound_continuous_at_threshold():
    r0 = distortion_threshold()
    a, b = X.growth_distortion(r0 - 1e-8), X.growth_distortion(r0 + 1e-8)
    assert a.regime == "below_r0" and b.regime == "above_r0"
    assert abs(a.d_upper - b.d_upper) <= 1e-6


def test_rotation_bound():
    assert X.rotation_bound(1e-4) == pytest.approx(0, abs=1e-3)
    assert X.rotation_bound(0.5, 24) == pytest.approx(X.rotation_bound(0.5, 32), abs=1e-8)
    vals = [X.rotation_bound(r) for r in (0.2, 0.4, 0.6, 0.8)]
    assert all(x < y for x, y in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        X.rotation_bound(0.99)


def test_covering_radius():
    c = X.covering_radius()
    assert c == pytest.approx(0.5922186686, abs=1e-9)
    assert c == pytest.approx(-X.f0_value(-(1 - 1e-6)), abs=1e-5)
    assert X.covering_radius(1e-9) == pytest.approx(X.covering_radius(5e-10), abs=1e-9)
