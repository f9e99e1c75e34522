from pathlib import Path

import pytest

from elliptic_mesh.solver import SolverConfig

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def quiet_config():
    """SolverConfig factory with the progress bar off"""
    def make(**kwargs):
        kwargs.setdefault('show_progress', False)
        return SolverConfig(**kwargs)
    return make
