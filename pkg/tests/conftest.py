import pytest
from hypothesis import HealthCheck, settings

from ssvpoly import kernel

settings.register_profile(
    "ssv", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture]
)
settings.load_profile("ssv")


@pytest.fixture(params=kernel.available_backends())
def backend(request):
    old = kernel.BACKEND
    kernel.use_backend(request.param)
    yield request.param
    kernel.use_backend(old)
