import math

import pytest

PI2 = math.pi ** 2


@pytest.fixture(scope="session")
def pi2():
    return PI2
