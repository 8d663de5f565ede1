import numpy as np
import pytest

from beanstar import verify


@pytest.fixture(scope="module")
def results():
    return verify.run_checks()


def test_suite_is_green(results):
    assert len(results) >= 25
    assert [r.name for r in results if not r.passed] == []


def test_names_unique(results):
    names = [r.name for r in results]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("delta", [1e-2, 1e-6])
def test_r0_perturbation_is_detected(delta):
    bad = {r.name for r in verify.run_checks(perturb_r0=delta) if not r.passed}
    assert {"r0_predicate_flip", "r0_value"} <= bad


def test_stencil_recovers_polynomial():
    c = verify.stencil_coefficients(lambda z: 1 + 2 * z - 3 * z**3, 5)
    assert np.allclose(c, [1, 2, 0, -3, 0, 0], atol=1e-12)


def test_reported_items():
    items = {r.name: r for r in verify.reported_items()}
    assert "0.500000" in items["bean_derivative_at_0"].detail
    assert "0.48" in items["starlike_wrt_one_infimum"].detail
    assert items["covering_radius"].passed
    # known defects show up as observations, not as suite failures
    assert not items["beta_sufficiency_random"].passed
    assert not items["limacon_negative_s"].passed
