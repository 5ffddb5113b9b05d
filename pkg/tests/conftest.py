"""
Pytest fixtures for the normal form lab tests.
Provides seeded randomness, common signatures and an isolated output directory.
"""

from pathlib import Path

import numpy as np
import pytest
from typer.testing import CliRunner

from src.core.config.settings import settings
from src.domains.series.models import Signature

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng():
    """Generator seeded like every command run."""
    return np.random.default_rng(17)


@pytest.fixture(params=[(1, 1), (2, 2), (2, 1)], ids=["n1", "n2-definite", "n2-split"])
def sig(request):
    return Signature(*request.param)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch):
    """Send reports to a temporary directory and restore global settings afterwards."""
    for name in ("MODE", "PRECISION_BITS", "TRUNC_WEIGHT", "SEED", "OUTPUT_DIR", "METRICS_FILE"):
        monkeypatch.setattr(settings, name, getattr(settings, name))
    monkeypatch.setattr(settings, "OUTPUT_DIR", str(tmp_path))
    return tmp_path


@pytest.fixture
def runner():
    return CliRunner()
