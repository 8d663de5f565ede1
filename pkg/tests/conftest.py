import math

import pytest

from beanstar import constants as K


@pytest.fixture(scope="session")
def bounds():
    from beanstar.geometry import sharp_bounds

    return sharp_bounds()


@pytest.fixture(scope="session")
def r0():
    return K.R0


E = math.e
