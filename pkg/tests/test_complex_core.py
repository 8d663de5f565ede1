import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beanstar import constants as K
from beanstar.complex_core import (
    PowerSeries,
    bean_derivative,
    bean_series,
    eval_bean,
    inverse_bean,
    series_exp_integrate,
)
from beanstar.errors import DomainError, SingularityError
from beanstar.verify import stencil_coefficients

disk_points = st.builds(
    lambda r, t: r * cmath.exp(1j * t),
    st.floats(0, 1),
    st.floats(0, 2 * math.pi),
)


@pytest.mark.parametrize(
    "z, w",
    [(0, 1), (1, K.R0), (-1, K.LEFT_END)],
)
def test_eval_bean_reference_points(z, w):
    assert eval_bean(z) == pytest.approx(w, abs=1e-15)
    assert abs(eval_bean(1) - 1.32725) < 5e-6
    assert abs(eval_bean(-1) - 0.48827) < 5e-6


def test_eval_bean_matches_tanh_form():
    z = 0.3 + 0.7j
    assert abs(eval_bean(z) - cmath.sqrt(1 + cmath.tanh(z))) < 1e-15


def test_eval_bean_rejects_outside_disk():
    with pytest.raises(DomainError):
        eval_bean(1.01)
    with pytest.raises(DomainError):
        eval_bean(np.array([0.5, 1.5j]))


def test_eval_bean_array_matches_scalar():
    z = np.array([0.1, -0.4j, 0.3 + 0.3j])
    assert np.allclose(eval_bean(z), [eval_bean(complex(v)) for v in z], atol=0, rtol=1e-15)


@pytest.mark.parametrize("w, z", [(1, 0), (K.R0, 1), (K.LEFT_END, -1)])
def test_inverse_reference_points(w, z):
    assert abs(inverse_bean(w) - z) < 1e-12


@pytest.mark.parametrize("w", [0, math.sqrt(2)])
def test_inverse_singular(w):
    with pytest.raises(SingularityError):
        inverse_bean(w)


@settings(max_examples=200)
@given(disk_points)
def test_conjugate_symmetry(z):
    assert abs(eval_bean(z.conjugate()) - eval_bean(z).conjugate()) <= 1e-12


@settings(max_examples=200)
@given(disk_points)
def test_round_trip(z):
    z = 0.999 * z
    assert abs(inverse_bean(eval_bean(z)) - z) <= 1e-10


@settings(max_examples=100)
@given(disk_points)
def test_image_in_right_half_plane(z):
    assert eval_bean(z).real > 0


def test_derivative_matches_difference_quotient():
    z, h = 0.2 + 0.3j, 1e-6
    fd = (eval_bean(z + h) - eval_bean(z - h)) / (2 * h)
    assert abs(bean_derivative(z) - fd) < 1e-9
    assert bean_derivative(0) == pytest.approx(0.5)


def test_bean_series_low_orders():
    assert list(bean_series(0)) == [1]
    assert list(bean_series(1)) == [1, F(1, 2)]
    assert bean_series(2)[2] == F(-1, 8)
    assert list(bean_series(4)) == [1, F(1, 2), F(-1, 8), F(-5, 48), F(17, 384)]


def test_bean_series_mode_switch():
    assert bean_series(12).exact
    assert not bean_series(13).exact
    assert not bean_series(8, exact=False).exact
    with pytest.raises(DomainError):
        bean_series(65)


def test_bean_series_against_stencil():
    c = stencil_coefficients(eval_bean, 8)
    s = bean_series(8)
    for n in range(9):
        assert abs(c[n] - float(s[n])) < 1e-6


def test_bean_series_float_matches_exact():
    a, b = bean_series(12, exact=True), bean_series(12, exact=False)
    assert max(abs(float(x) - y) for x, y in zip(a, b)) < 1e-14


def test_bean_series_evaluation_converges():
    s = bean_series(40)
    for z in (0.3, 0.5j, -0.4 + 0.2j):
        assert abs(s(z) - eval_bean(z)) < 1e-10


def test_series_exp_integrate_examples():
    assert list(series_exp_integrate(PowerSeries([F(1)]))) == [0, 1]
    ident = series_exp_integrate(PowerSeries([F(1), F(0), F(0)]))
    assert list(ident) == [0, 1, 0, 0]
    zez = series_exp_integrate(PowerSeries([F(1), F(1), F(0), F(0)]))
    assert list(zez) == [0, 1, 1, F(1, 2), F(1, 6)]
    f0 = series_exp_integrate(bean_series(4))
    assert list(f0) == [0, 1, F(1, 2), F(1, 16), F(-13, 288), F(-11, 1152)]


def test_series_exp_integrate_rejects_bad_constant():
    with pytest.raises(ValueError):
        series_exp_integrate(PowerSeries([F(2), F(1)]))


def test_power_series_algebra():
    a = PowerSeries([F(1), F(2), F(3)])
    b = PowerSeries([F(1), F(-1), F(0)])
    assert list(a * b) == [1, 1, 1]
    assert list((a * b) / b) == list(a)
    assert list(a.derivative()) == [2, 6]
    assert list(a.integrate().derivative()) == list(a)
    assert list(a + 1) == [2, 2, 3]
    assert list(a - a) == [0, 0, 0]
    exp_t = PowerSeries([F(0), F(1), F(0), F(0)]).exp()
    assert list(exp_t) == [1, 1, F(1, 2), F(1, 6)]


def test_compose_requires_vanishing_inner():
    with pytest.raises(ValueError):
        PowerSeries([1, 1]).compose(PowerSeries([1, 1]))


def test_horner_on_arrays():
    p = PowerSeries([1.0, 2.0, 3.0])
    x = np.array([0.0, 1.0, 2.0])
    assert np.allclose(p(x), 1 + 2 * x + 3 * x * x)
