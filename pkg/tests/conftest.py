"""Pytest configuration and fixtures."""

import numpy as np
import pytest


@pytest.fixture(name="rng")
def _rng():
    """Seeded generator, fresh per test."""
    return np.random.default_rng(20251019)
