import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from lateralvdw import TwoAtomSystem

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def peak_system() -> TwoAtomSystem:
    """Cs-Rb pair at the first positive lateral-force peak."""
    return TwoAtomSystem.cs_rb(632e-9)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260822)
