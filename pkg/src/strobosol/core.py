"""Periodic grid, wave-function container and basic spectral operations.

Everything downstream works in dimensionless units (hbar = m = 1) on a
uniform periodic grid spanning [-length/2, length/2).  Integrals are
Riemann sums with weight dx, which is spectrally accurate for smooth
periodic data.  Momentum space uses the standard FFT lattice, so plane
waves exp(i*k*x) with k on the lattice are represented exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MIN_POINTS = 16

DEFAULT_POINTS = 2048
DEFAULT_LENGTH = 80.0


@dataclass(frozen=True)
class Grid:
    """Uniform periodic spatial grid.

    Arrays x, k and the spacing dx are derived once at construction and
    never mutated, so instances are safe to share.
    """

    n_points: int
    length: float
    dx: float = field(init=False, compare=False)
    x: np.ndarray = field(init=False, compare=False, repr=False)
    k: np.ndarray = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n_points < MIN_POINTS:
            raise ValueError(f"n_points must be >= {MIN_POINTS}, got {self.n_points}")
        if not self.length > 0:
            raise ValueError(f"length must be positive, got {self.length}")
        dx = self.length / self.n_points
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "x", -0.5 * self.length + dx * np.arange(self.n_points))
        object.__setattr__(self, "k", 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=dx))
        self.x.setflags(write=False)
        self.k.setflags(write=False)


def make_grid(n_points: int = DEFAULT_POINTS, length: float = DEFAULT_LENGTH) -> Grid:
    """Build a periodic grid; powers of two keep the FFTs fast."""
    return Grid(n_points, length)


@dataclass
class WaveFunction:
    """Complex field samples on a grid.

    values is always a complex128 array owned by the instance; the
    constructor copies its input, so callers may reuse their buffers.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.complex128)
        if values.shape != (self.grid.n_points,):
            raise ValueError(
                f"values shape {values.shape} does not match grid ({self.grid.n_points},)"
            )
        self.values = values.copy()


def from_samples(grid: Grid, samples: np.ndarray) -> WaveFunction:
    """Wrap an array of samples (any numeric dtype) as a WaveFunction."""
    return WaveFunction(grid, samples)


def _check_same_grid(a: WaveFunction, b: WaveFunction) -> None:
    if a.grid != b.grid:
        raise ValueError("wave functions live on different grids")


def norm_sq(wf: WaveFunction) -> float:
    """Integral of |psi|^2 over the box."""
    return float(np.sum(np.abs(wf.values) ** 2) * wf.grid.dx)


def normalize(wf: WaveFunction) -> WaveFunction:
    """Rescale to unit norm; rejects the zero field."""
    n = norm_sq(wf)
    if n <= 0.0:
        raise ValueError("cannot normalize a zero wave function")
    return WaveFunction(wf.grid, wf.values / np.sqrt(n))


def inner_product(a: WaveFunction, b: WaveFunction) -> complex:
    """Hermitian inner product <a|b> = integral conj(a) * b dx."""
    _check_same_grid(a, b)
    return complex(np.sum(np.conj(a.values) * b.values) * a.grid.dx)


def moments(wf: WaveFunction) -> tuple[float, float]:
    """Mean position and variance of the density |psi|^2.

    The density is renormalized internally, so the input need not have
    unit norm.
    """
    density = np.abs(wf.values) ** 2
    total = float(np.sum(density) * wf.grid.dx)
    if total <= 0.0:
        raise ValueError("zero wave function has no moments")
    mean = float(np.sum(wf.grid.x * density) * wf.grid.dx / total)
    var = float(np.sum((wf.grid.x - mean) ** 2 * density) * wf.grid.dx / total)
    return mean, var


def width(wf: WaveFunction) -> float:
    """Standard deviation of the density."""
    return float(np.sqrt(moments(wf)[1]))


def spectral_derivative(wf: WaveFunction, order: int = 1) -> WaveFunction:
    """Differentiate by multiplying with (ik)^order in Fourier space.

    For odd orders the Nyquist mode is zeroed: its derivative has no
    consistent sign on the real line, and dropping it keeps real input
    real.
    """
    if order < 1:
        raise ValueError(f"order must be a positive integer, got {order}")
    multiplier = (1j * wf.grid.k) ** order
    if order % 2 == 1 and wf.grid.n_points % 2 == 0:
        multiplier = multiplier.copy()
        multiplier[wf.grid.n_points // 2] = 0.0
    return WaveFunction(wf.grid, np.fft.ifft(multiplier * np.fft.fft(wf.values)))


def translate(wf: WaveFunction, shift: float) -> WaveFunction:
    """Shift the field by +shift (periodically) via a Fourier phase ramp."""
    phase = np.exp(-1j * wf.grid.k * shift)
    return WaveFunction(wf.grid, np.fft.ifft(phase * np.fft.fft(wf.values)))


def boost(wf: WaveFunction, velocity: float) -> WaveFunction:
    """Multiply by the Galilean phase ramp exp(i*v*x)."""
    return WaveFunction(wf.grid, wf.values * np.exp(1j * velocity * wf.grid.x))


def edge_amplitude(wf: WaveFunction, fraction: float = 0.1) -> float:
    """Largest |psi| in the outer fraction of the box.

    A periodic run is only trustworthy while this stays small; callers
    decide the threshold appropriate to their tolerance.
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must lie in (0, 1), got {fraction}")
    n_edge = max(2, int(round(wf.grid.n_points * fraction)))
    half = n_edge // 2
    mags = np.abs(wf.values)
    return float(max(mags[:half].max(), mags[-(n_edge - half):].max()))
