"""FourierUp modules: transform, up-sample amplitude and phase, mix channels, invert.

A feature tensor is a real ``(C, H, W)`` array. Each pipeline returns a
``(C, 2H, 2W)`` array:

* ``padding``: periodic padding of amplitude and phase
* ``area``: 2x2 area interpolation, then corner cropping, merge and resize
* ``corner``: corner interpolation (spectral zero padding)

The learnable 1x1 convolutions are bias-free per-pixel channel mixes, one for
the amplitude branch and one for the phase branch. Mixed phases are used
as-is, without wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from .polar import PolarGrid, from_polar, to_polar
from .rules import (
    area_interpolate2x,
    bilinear_resize,
    corner_crop_merge_resize,
    corner_crop_merge_resize_adjoint,
    corner_interpolate2x,
    periodic_pad2x,
)
from .spectral import fft2, ifft2

__all__ = [
    "ChannelMixer",
    "UpsampleConfig",
    "PipelineResult",
    "as_feature_tensor",
    "mixer_apply",
    "fourierup_padding",
    "fourierup_area",
    "fourierup_corner",
    "spatial_upsample2x",
    "combine_with_spatial",
    "run_pipeline",
    "mixer_gradient",
    "VARIANTS",
    "COMBINES",
]

Variant = Literal["padding", "area", "corner"]
Combine = Literal["fourier_only", "average_with_bilinear"]
VARIANTS = ("padding", "area", "corner")
COMBINES = ("fourier_only", "average_with_bilinear")

# identity-mixer corner outputs of real input must be real up to this (scaled) residue
CORNER_IMAG_TOL = 1e-10


def as_feature_tensor(X, name: str = "X") -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 3 or min(X.shape) < 1:
        raise ValueError(f"{name} must be a non-empty (C, H, W) array, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError(f"{name} contains non-finite samples")
    return X


@dataclass(frozen=True)
class ChannelMixer:
    """Two C x C matrices standing in for the amplitude and phase 1x1 convolutions."""

    amp_weights: np.ndarray
    phase_weights: np.ndarray

    def __post_init__(self):
        wa = np.array(self.amp_weights, dtype=np.float64)
        wp = np.array(self.phase_weights, dtype=np.float64)
        for name, w in (("amp_weights", wa), ("phase_weights", wp)):
            if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
                raise ValueError(f"{name} must be a non-empty square matrix, got shape {w.shape}")
            if not np.all(np.isfinite(w)):
                raise ValueError(f"{name} contains non-finite entries")
        if wa.shape != wp.shape:
            raise ValueError("amplitude and phase weights differ in size")
        wa.flags.writeable = False
        wp.flags.writeable = False
        object.__setattr__(self, "amp_weights", wa)
        object.__setattr__(self, "phase_weights", wp)

    @property
    def channels(self) -> int:
        return self.amp_weights.shape[0]

    @classmethod
    def identity(cls, channels: int) -> "ChannelMixer":
        return cls(np.eye(channels), np.eye(channels))

    def is_identity(self) -> bool:
        eye = np.eye(self.channels)
        return bool(np.array_equal(self.amp_weights, eye) and np.array_equal(self.phase_weights, eye))

    @classmethod
    def from_text(cls, text: str) -> "ChannelMixer":
        """Parse ``C`` followed by C*C amplitude then C*C phase entries (whitespace separated)."""
        tokens = text.split()
        if not tokens:
            raise ValueError("empty mixer description")
        C = int(tokens[0])
        if C < 1:
            raise ValueError(f"channel count must be positive, got {C}")
        values = [float(t) for t in tokens[1:]]
        if len(values) != 2 * C * C:
            raise ValueError(f"expected {2 * C * C} weights for C={C}, got {len(values)}")
        arr = np.array(values).reshape(2, C, C)
        return cls(arr[0], arr[1])

    def to_text(self) -> str:
        rows = [str(self.channels)]
        for w in (self.amp_weights, self.phase_weights):
            rows.extend(" ".join(repr(float(v)) for v in row) for row in w)
        return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class UpsampleConfig:
    variant: Variant = "padding"
    combine: Combine = "fourier_only"
    crop: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.combine not in COMBINES:
            raise ValueError(f"unknown combine mode {self.combine!r}; expected one of {COMBINES}")
        if self.crop is not None:
            object.__setattr__(self, "crop", (int(self.crop[0]), int(self.crop[1])))


@dataclass(frozen=True)
class PipelineResult:
    output: np.ndarray
    # largest |imag| dropped when taking the real part of the inverse transform
    imag_residue: float


def _check_mixer(m: ChannelMixer, channels: int) -> None:
    if m.channels != channels:
        raise ValueError(f"mixer is {m.channels}x{m.channels} but input has {channels} channels")


def _mix(weights: np.ndarray, stack: np.ndarray) -> np.ndarray:
    return np.einsum("cd,d...->c...", weights, stack)


def mixer_apply(p: list[PolarGrid], m: ChannelMixer) -> list[PolarGrid]:
    """Per-pixel linear map across channels, separately on amplitude and phase."""
    _check_mixer(m, len(p))
    amp = _mix(m.amp_weights, np.stack([q.amplitude for q in p]))
    pha = _mix(m.phase_weights, np.stack([q.phase for q in p]))
    return [PolarGrid(a, ph) for a, ph in zip(amp, pha)]


def _upsample_polar(variant: str, amp: np.ndarray, pha: np.ndarray):
    if variant == "padding":
        return periodic_pad2x(amp), periodic_pad2x(pha)
    if variant == "area":
        return area_interpolate2x(amp), area_interpolate2x(pha)
    # the Nyquist split scales the complex bin, i.e. the amplitude only
    return corner_interpolate2x(amp), corner_interpolate2x(pha, split_nyquist=False)


@dataclass
class _Trace:
    amp_up: np.ndarray
    pha_up: np.ndarray
    amp_mixed: np.ndarray
    pha_mixed: np.ndarray
    output: np.ndarray
    imag_residue: float


def _forward(X: np.ndarray, m: ChannelMixer, variant: str, crop=None) -> _Trace:
    _check_mixer(m, X.shape[0])
    polar = to_polar(fft2(X))
    amp_up, pha_up = _upsample_polar(variant, polar.amplitude, polar.phase)
    amp_mixed = _mix(m.amp_weights, amp_up)
    pha_mixed = _mix(m.phase_weights, pha_up)
    z = ifft2(from_polar(PolarGrid(amp_mixed, pha_mixed)))
    y = z.real
    residue = float(np.max(np.abs(z.imag)))
    if variant == "area":
        y = corner_crop_merge_resize(y, crop)
    elif variant == "corner" and m.is_identity():
        if residue > CORNER_IMAG_TOL * max(1.0, float(np.max(np.abs(y)))):
            raise ArithmeticError(f"corner interpolation lost Hermitian symmetry: imaginary residue {residue:.3e}")
    return _Trace(amp_up, pha_up, amp_mixed, pha_mixed, y, residue)


def fourierup_padding(X, m: Optional[ChannelMixer] = None) -> np.ndarray:
    X = as_feature_tensor(X)
    m = m or ChannelMixer.identity(X.shape[0])
    return _forward(X, m, "padding").output


def fourierup_area(X, m: Optional[ChannelMixer] = None, cfg: Optional[UpsampleConfig] = None) -> np.ndarray:
    X = as_feature_tensor(X)
    m = m or ChannelMixer.identity(X.shape[0])
    crop = cfg.crop if cfg is not None else None
    return _forward(X, m, "area", crop).output


def fourierup_corner(X, m: Optional[ChannelMixer] = None) -> np.ndarray:
    X = as_feature_tensor(X)
    m = m or ChannelMixer.identity(X.shape[0])
    return _forward(X, m, "corner").output


def spatial_upsample2x(X) -> np.ndarray:
    """Per-channel bilinear 2x up-sampling (the spatial baseline)."""
    X = as_feature_tensor(X)
    return bilinear_resize(X, 2 * X.shape[1], 2 * X.shape[2])


def combine_with_spatial(Y_fourier, X, cfg: UpsampleConfig) -> np.ndarray:
    Y = np.asarray(Y_fourier, dtype=np.float64)
    X = as_feature_tensor(X)
    expected = (X.shape[0], 2 * X.shape[1], 2 * X.shape[2])
    if Y.shape != expected:
        raise ValueError(f"Fourier branch has shape {Y.shape}, expected {expected}")
    if cfg.combine == "fourier_only":
        return Y
    return 0.5 * (Y + spatial_upsample2x(X))


def run_pipeline(X, m: Optional[ChannelMixer] = None, cfg: Optional[UpsampleConfig] = None) -> PipelineResult:
    """Selected FourierUp variant followed by the configured spatial combination."""
    X = as_feature_tensor(X)
    cfg = cfg or UpsampleConfig()
    m = m or ChannelMixer.identity(X.shape[0])
    trace = _forward(X, m, cfg.variant, cfg.crop)
    return PipelineResult(combine_with_spatial(trace.output, X, cfg), trace.imag_residue)


def mixer_gradient(X, m: ChannelMixer, target, cfg: Optional[UpsampleConfig] = None):
    """Loss ``0.5 * sum((Y - target)**2)`` and its gradient with respect to both mixers.

    Returns ``(loss, grad_amp, grad_phase)``. The gradient is propagated by
    hand through the crop/resize adjoint, the real part of the inverse
    transform, and the polar recombination.
    """
    X = as_feature_tensor(X)
    cfg = cfg or UpsampleConfig()
    trace = _forward(X, m, cfg.variant, cfg.crop)
    Y = combine_with_spatial(trace.output, X, cfg)
    target = np.asarray(target, dtype=np.float64)
    if target.shape != Y.shape:
        raise ValueError(f"target has shape {target.shape}, pipeline output is {Y.shape}")
    resid = Y - target
    loss = 0.5 * float(np.sum(resid * resid))

    d_out = resid if cfg.combine == "fourier_only" else 0.5 * resid
    if cfg.variant == "area":
        d_real = corner_crop_merge_resize_adjoint(d_out, cfg.crop)
    else:
        d_real = d_out
    # d loss / d Re(Z) = Re(S), d loss / d Im(Z) = -Im(S) with S the inverse transform of d_real
    S = ifft2(d_real)
    d_re, d_im = S.real, -S.imag
    cos_p, sin_p = np.cos(trace.pha_mixed), np.sin(trace.pha_mixed)
    d_amp = d_re * cos_p + d_im * sin_p
    d_pha = trace.amp_mixed * (d_im * cos_p - d_re * sin_p)
    grad_amp = np.einsum("chw,dhw->cd", d_amp, trace.amp_up)
    grad_phase = np.einsum("chw,dhw->cd", d_pha, trace.pha_up)
    return loss, grad_amp, grad_phase
