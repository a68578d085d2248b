"""
Shared fixtures: constructed embeddings are built once per session.
"""
import os

import pytest
from hypothesis import HealthCheck, settings

from src.hypercube_embedding.core.construct import construct

settings.register_profile("dev", max_examples=50, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(scope="session")
def q2():
    """(decomposition, rotation) of the base case."""
    return construct(2)


@pytest.fixture(scope="session")
def q4():
    return construct(4)


@pytest.fixture(scope="session")
def q8():
    return construct(8)


@pytest.fixture(scope="session")
def q16():
    """Only requested by tests marked slow."""
    return construct(16)
