from pathlib import Path

import numpy as np
import pytest


def write_trajectory(
    path: Path, times, fidelities, widths=None, norms=None
) -> Path:
    times = np.asarray(times, dtype=float)
    fidelities = np.asarray(fidelities, dtype=float)
    widths = (
        np.full_like(times, 1.8) if widths is None else np.asarray(widths, float)
    )
    norms = (
        np.ones_like(times) if norms is None else np.asarray(norms, float)
    )
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write("t,fidelity,width,norm\n")
        for row in zip(times, fidelities, widths, norms):
            fh.write(",".join("%.17g" % v for v in row) + "\n")
    return path


@pytest.fixture()
def trajectory_factory(tmp_path):
    def factory(name, times, fidelities, widths=None, norms=None):
        return write_trajectory(
            tmp_path / name, times, fidelities, widths, norms
        )

    return factory


@pytest.fixture()
def decay_pair(tmp_path, trajectory_factory):
    """Two synthetic decay curves, 'slow' strictly below 'fast'."""
    t = np.arange(0, 21) * 0.1
    fast = 1.0 - 1e-3 * (1.0 - np.exp(-t))
    slow = 1.0 - 1e-6 * (1.0 - np.exp(-t))
    return {
        "fast": trajectory_factory("fast.csv", t, fast),
        "slow": trajectory_factory("slow.csv", t, slow),
        "times": t,
    }
