"""Figure assembly for fidelity-decay and width-evolution plots.

The style map keys on the curve's `style` name so the bundled specs
render with consistent conventions: the reference Gaussian thin and
solid, the bare sech profile thick and dashed, the corrected soliton
thick and solid, kick-free references dotted.  Unknown styles fall back
to matplotlib's color cycle.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .plotspec import (
    KIND_FIDELITY,
    KIND_WIDTH,
    PlotSpec,
    read_trajectory,
)

STYLES = {
    "gaussian": {"color": "0.25", "linewidth": 1.0, "linestyle": "-"},
    "phi0": {"color": "tab:blue", "linewidth": 2.2, "linestyle": "--"},
    "soliton": {"color": "tab:red", "linewidth": 2.2, "linestyle": "-"},
    "free": {"color": "0.55", "linewidth": 1.0, "linestyle": ":"},
}

FLOOR_FALLBACK = 1e-16
DPI = 150

# savefig writes a timestamp/tool stamp by default in some backends;
# clearing these keeps byte-identical figures for byte-identical inputs
_METADATA = {
    "png": {"Software": None},
    "pdf": {"CreationDate": None},
    "svg": {"Date": None},
}


def _line_style(name: str):
    return dict(STYLES.get(name, {"linewidth": 1.5, "linestyle": "-"}))


def build_fidelity_figure(spec: PlotSpec):
    """Log-scale fidelity error (1 - F) for every curve in the spec.

    With epsilon set, the x axis is the kick number t/epsilon.  Error
    values that clip to zero (the t = 0 sample, rounding above 1) are
    drawn at the axis floor, one decade below the smallest positive
    value, rather than dropped.
    """
    loaded = [(c, read_trajectory(c.csv)) for c in spec.curves]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    floor = FLOOR_FALLBACK
    positive = [
        err[err > 0.0]
        for _, data in loaded
        for err in [np.clip(1.0 - data.fidelities, 0.0, None)]
    ]
    smallest = min(
        (block.min() for block in positive if block.size), default=None
    )
    if smallest is not None:
        floor = max(FLOOR_FALLBACK, float(smallest) / 10.0)
    for curve, data in loaded:
        x = data.times if spec.epsilon is None else data.times / spec.epsilon
        err = np.clip(1.0 - data.fidelities, 0.0, None)
        err = np.where(err > 0.0, err, floor)
        ax.plot(x, err, label=curve.label, **_line_style(curve.style))
    ax.set_yscale("log")
    ax.set_ylim(bottom=floor)
    ax.set_xlabel("t" if spec.epsilon is None else "kick number")
    ax.set_ylabel("fidelity error 1 - F")
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    ax.grid(True, which="both", alpha=0.25)
    fig.tight_layout()
    return fig


def build_width_figure(spec: PlotSpec):
    """Width against time, linear axes; the x range is the union of the
    curves' time ranges.  With inset = true (and epsilon set) a small
    panel repeats the first three kick periods, where the mid-interval
    samples make the per-period breathing visible.
    """
    loaded = [(c, read_trajectory(c.csv)) for c in spec.curves]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for curve, data in loaded:
        ax.plot(
            data.times, data.widths, label=curve.label, **_line_style(curve.style)
        )
    ax.set_xlabel("t")
    ax.set_ylabel("width")
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    if spec.inset and spec.epsilon is not None:
        span = 3.0 * spec.epsilon
        # figure-level axes rather than a child of ax, so it shows up
        # in fig.axes; added after tight_layout on purpose
        sub = fig.add_axes([0.58, 0.24, 0.30, 0.28])
        for curve, data in loaded:
            mask = data.times <= span + 1e-12
            sub.plot(
                data.times[mask],
                data.widths[mask],
                **_line_style(curve.style),
            )
        sub.set_xlim(0.0, span)
        sub.tick_params(labelsize=7)
    return fig


def save_figure(fig, output: str | Path, formats) -> list[Path]:
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    written = []
    for ext in formats:
        # append the extension; with_suffix would eat dotted stems like
        # "fig2_eps0.1"
        target = output.parent / f"{output.name}.{ext}"
        fig.savefig(target, dpi=DPI, metadata=_METADATA.get(ext))
        written.append(target)
    return written


def plot_fidelity(spec: PlotSpec) -> list[Path]:
    fig = build_fidelity_figure(spec)
    try:
        return save_figure(fig, spec.output, spec.formats)
    finally:
        plt.close(fig)


def plot_width(spec: PlotSpec) -> list[Path]:
    fig = build_width_figure(spec)
    try:
        return save_figure(fig, spec.output, spec.formats)
    finally:
        plt.close(fig)


BUILDERS = {
    KIND_FIDELITY: build_fidelity_figure,
    KIND_WIDTH: build_width_figure,
}

PLOTTERS = {
    KIND_FIDELITY: plot_fidelity,
    KIND_WIDTH: plot_width,
}
