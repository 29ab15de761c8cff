"""Shared fixtures and the hypothesis profile."""

import pytest
from hypothesis import HealthCheck, settings

from torus_tqft.tqft.builtins import builtin

settings.register_profile(
    "torus",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("torus")


@pytest.fixture(scope="session")
def f1():
    return builtin("F1")


@pytest.fixture(scope="session")
def f2():
    return builtin("F2")


@pytest.fixture(scope="session")
def f3():
    return builtin("F3")


@pytest.fixture(params=["F1", "F2", "F3"])
def any_tqft(request):
    return builtin(request.param)
