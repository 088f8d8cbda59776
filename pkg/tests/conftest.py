import pytest
from hypothesis import HealthCheck, settings

from facehit import generators

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    return generators.corpus()
