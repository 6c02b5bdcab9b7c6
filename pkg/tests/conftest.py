"""Pytest configuration and fixtures."""

# Add src to Python path
import sys
from pathlib import Path
from typing import Dict, List

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.polyarith import Poly  # noqa: E402


def _poly(coeffs: List[int]) -> Poly:
    return Poly.from_coeffs(coeffs)


@pytest.fixture
def p_tilde_list() -> Dict[int, Poly]:
    """P~_0..P~_4, ascending coefficients."""
    return {
        0: _poly([0, 1]),
        1: _poly([1, 0, -1]),
        2: _poly([0, -2, 0, 2]),
        3: _poly([-2, 0, 8, 0, -6]),
        4: _poly([0, 16, 0, -40, 0, 24]),
    }


@pytest.fixture
def q_tilde_list() -> Dict[int, Poly]:
    """Q~_0..Q~_4, ascending coefficients."""
    return {
        0: _poly([1]),
        1: _poly([0, -1]),
        2: _poly([-1, 0, 2]),
        3: _poly([0, 5, 0, -6]),
        4: _poly([5, 0, -28, 0, 24]),
    }


@pytest.fixture
def d_small_list() -> Dict[int, Poly]:
    """d_2..d_6."""
    return {
        2: _poly([0, 0, 1]),
        3: _poly([0, -2, 0, 3]),
        4: _poly([1, 0, -12, 0, 12]),
        5: _poly([0, 21, 0, -80, 0, 60]),
        6: _poly([-13, 0, 254, 0, -600, 0, 360]),
    }


@pytest.fixture
def eulerian_d_list() -> Dict[int, Poly]:
    """D_0..D_3."""
    return {
        0: _poly([1]),
        1: _poly([1]),
        2: _poly([1, 2, 1]),
        3: _poly([1, 11, 11, 1]),
    }


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep EULERCERT_* settings from the caller's shell out of the tests."""
    for key in [
        "FAMILY", "SUITE", "CHECK", "N", "N_MAX", "BRUTE_CAP", "SERIES_ORDER", "FORMAT",
        "OUT", "SEED", "JOBS", "SAMPLES", "LOG_LEVEL", "LOG_FILE", "CONFIG_DIR",
    ]:
        monkeypatch.delenv(f"EULERCERT_{key}", raising=False)


@pytest.fixture
def env_setup(monkeypatch, tmp_path):
    """Set up environment variables for testing."""
    monkeypatch.setenv("EULERCERT_BRUTE_CAP", "6")
    monkeypatch.setenv("EULERCERT_SEED", "7")
    monkeypatch.setenv("EULERCERT_FORMAT", "csv")
    monkeypatch.setenv("EULERCERT_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("EULERCERT_OUT", str(tmp_path / "out.csv"))
