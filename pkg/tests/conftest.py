import pytest
from hypothesis import HealthCheck, settings

from redcore.ideals import RingDescriptor

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def kxy():
    return RingDescriptor("xy")


@pytest.fixture
def cusp():
    return RingDescriptor("xy", relations=["y^2 - x^3"], complete_intersection=True)
