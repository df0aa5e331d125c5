import pytest
from hypothesis import HealthCheck, settings

from beamcov import build_array

settings.register_profile(
    "beamcov",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("beamcov")


@pytest.fixture(scope="session")
def cfg64():
    return build_array(64, 30e9, tx_power=1.0)


@pytest.fixture(scope="session")
def cfg256():
    return build_array(256, 30e9, tx_power=1.0)
