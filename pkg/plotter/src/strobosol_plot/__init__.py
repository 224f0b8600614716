"""Figure generation for strobosol trajectory CSV output."""

__version__ = "1.0.0"

from .figures import (
    STYLES,
    build_fidelity_figure,
    build_width_figure,
    plot_fidelity,
    plot_width,
    save_figure,
)
from .plotspec import (
    KIND_FIDELITY,
    KIND_WIDTH,
    CurveSpec,
    PlotDataError,
    PlotSpec,
    PlotSpecError,
    TrajectoryData,
    parse_plot_spec,
    read_trajectory,
)

__all__ = [
    "STYLES",
    "build_fidelity_figure",
    "build_width_figure",
    "plot_fidelity",
    "plot_width",
    "save_figure",
    "KIND_FIDELITY",
    "KIND_WIDTH",
    "CurveSpec",
    "PlotDataError",
    "PlotSpec",
    "PlotSpecError",
    "TrajectoryData",
    "parse_plot_spec",
    "read_trajectory",
]
