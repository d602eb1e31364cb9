"""Shared fixtures for the bohrkit test suite."""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from bohrkit.core.config import OUTPUT_DIR_ENV
from bohrkit.utils.formatters import Colors


settings.register_profile(
    "bohrkit",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("bohrkit")


@pytest.fixture(autouse=True)
def isolated_output(monkeypatch, tmp_path):
    """Keep reports out of the working tree and colours out of captured output."""
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "reports"))
    monkeypatch.setenv("NO_COLOR", "1")
    Colors.disable()
    yield


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
