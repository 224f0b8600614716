from pathlib import Path

import pytest

import strobosol as ss

REPO_ROOT = Path(__file__).resolve().parents[1]
CONFIG_DIR = REPO_ROOT / "configs"


@pytest.fixture(scope="session")
def grid_default() -> ss.Grid:
    return ss.make_grid()


@pytest.fixture(scope="session")
def grid_wide() -> ss.Grid:
    # Same spacing as the default but a double-length box; the slowly
    # decaying first-order modes need the extra room.
    return ss.make_grid(4096, 160.0)


@pytest.fixture(scope="session")
def grid_coarse() -> ss.Grid:
    return ss.make_grid(256, 40.0)
