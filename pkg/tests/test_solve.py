import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beanstar.errors import NoRootError
from beanstar.solve import Interval, SolveConfig, extremize, golden_max, smallest_root


def test_smallest_root_examples():
    assert smallest_root(lambda x: x * x - 2, (0, 2)) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert abs(smallest_root(lambda x: x, (-1, 1))) <= 1e-12


def test_smallest_root_convexity_equation():
    def g(r):
        return 1 + 2 * np.exp(2 * r) + np.exp(4 * r) - (-1 + np.exp(2 * r) + 2 * np.exp(4 * r)) * r

    r = smallest_root(g, (0, 1))
    assert 0.7073 <= r <= 0.7075


def test_smallest_root_picks_first_of_several():
    assert smallest_root(np.sin, (1, 10)) == pytest.approx(math.pi, abs=1e-12)


def test_smallest_root_touching_zero():
    assert smallest_root(lambda x: (x - 0.3) ** 2, (0, 1)) == pytest.approx(0.3, abs=1e-6)


def test_no_root():
    with pytest.raises(NoRootError):
        smallest_root(lambda x: 1 + x * x, (0, 1))


def test_scan_doubling_is_stable():
    f = lambda x: np.cos(3 * x) - x
    base = SolveConfig()
    assert smallest_root(f, (0, 2), base) == pytest.approx(smallest_root(f, (0, 2), base.doubled()), abs=1e-13)


def test_extremize_examples():
    t, v = extremize(np.cos, (0, math.pi), "max")
    assert (t, v) == (pytest.approx(0, abs=1e-9), pytest.approx(1))
    t, v = extremize(np.cos, (0, math.pi), "min")
    assert t == pytest.approx(math.pi, abs=1e-9) and v == pytest.approx(-1)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 3.0))
def test_extremize_negation_symmetry(shift):
    f = lambda t: np.sin(t + shift) * np.exp(-t)
    a = extremize(f, (0, 4), "max")
    b = extremize(lambda t: -f(t), (0, 4), "min")
    assert a[0] == b[0] and a[1] == -b[1]


def test_golden_max():
    x, v = golden_max(lambda t: -(t - 0.37) ** 2, 0, 1, 1e-10)
    assert x == pytest.approx(0.37, abs=1e-8)


@pytest.mark.parametrize("bad", [(1, 0), (0, math.inf)])
def test_interval_validation(bad):
    with pytest.raises(ValueError):
        Interval(*bad)


def test_config_validation():
    with pytest.raises(ValueError):
        SolveConfig(tol=0)
    with pytest.raises(ValueError):
        SolveConfig(scan_points=4)
    assert SolveConfig().doubled().scan_points == 8192
