"""Amplitude/phase representation of complex spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["PolarGrid", "to_polar", "from_polar"]


@dataclass(frozen=True)
class PolarGrid:
    """Paired amplitude and phase grids of one shape.

    ``to_polar`` yields amplitudes >= 0 and phases in (-pi, pi]. Grids built
    by channel mixing may hold negative amplitudes or unwrapped phases;
    ``from_polar`` accepts both.
    """

    amplitude: np.ndarray
    phase: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitude, dtype=np.float64)
        pha = np.asarray(self.phase, dtype=np.float64)
        if amp.shape != pha.shape:
            raise ValueError(f"amplitude {amp.shape} and phase {pha.shape} differ in shape")
        if not (np.all(np.isfinite(amp)) and np.all(np.isfinite(pha))):
            raise ValueError("polar grid contains non-finite samples")
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "phase", pha)

    @property
    def shape(self):
        return self.amplitude.shape


def to_polar(Z) -> PolarGrid:
    Z = np.asarray(Z, dtype=np.complex128)
    amp = np.abs(Z)
    phase = np.angle(Z)
    # (-pi, pi]: atan2 returns -pi for negative reals carrying a -0.0 imaginary part
    phase = np.where(phase == -np.pi, np.pi, phase)
    phase = np.where(amp == 0.0, 0.0, phase)
    return PolarGrid(amp, phase)


def from_polar(p: PolarGrid) -> np.ndarray:
    return p.amplitude * np.exp(1j * p.phase)
