"""Image-level helpers: tensor conversion, spatial resampling baselines, PSNR."""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .netpbm import RasterImage
from .pipelines import ChannelMixer, UpsampleConfig, run_pipeline, spatial_upsample2x

__all__ = [
    "PSNR_CAP_DB",
    "psnr",
    "image_to_tensor",
    "tensor_to_image",
    "downscale2x",
    "nearest_upsample2x",
    "upsample_image",
]

PSNR_CAP_DB = 99.0


def _samples(img) -> np.ndarray:
    return img.samples if isinstance(img, RasterImage) else np.asarray(img)


def psnr(a, b) -> float:
    """PSNR in dB for 8-bit data; identical inputs give ``PSNR_CAP_DB``."""
    sa = _samples(a).astype(np.float64)
    sb = _samples(b).astype(np.float64)
    if sa.shape != sb.shape:
        raise ValueError(f"shape mismatch: {sa.shape} vs {sb.shape}")
    mse = float(np.mean((sa - sb) ** 2))
    if mse == 0.0:
        return PSNR_CAP_DB
    return 10.0 * math.log10(255.0**2 / mse)


def image_to_tensor(img: RasterImage) -> np.ndarray:
    """``(C, H, W)`` float array scaled to [0, 1]."""
    return np.transpose(img.samples, (2, 0, 1)).astype(np.float64) / 255.0


def tensor_to_image(X) -> RasterImage:
    X = np.clip(np.asarray(X, dtype=np.float64), 0.0, 1.0)
    samples = np.rint(X * 255.0).astype(np.uint8)
    return RasterImage(np.transpose(samples, (1, 2, 0)))


def downscale2x(img: RasterImage) -> RasterImage:
    """2x2 average pooling; an odd trailing row or column is dropped."""
    s = img.samples.astype(np.float64)
    H, W = (img.height // 2) * 2, (img.width // 2) * 2
    if H == 0 or W == 0:
        raise ValueError("image too small to downscale")
    s = s[:H, :W]
    pooled = 0.25 * (s[0::2, 0::2] + s[1::2, 0::2] + s[0::2, 1::2] + s[1::2, 1::2])
    return RasterImage(np.rint(pooled).astype(np.uint8))


def nearest_upsample2x(img: RasterImage) -> RasterImage:
    return RasterImage(np.repeat(np.repeat(img.samples, 2, axis=0), 2, axis=1))


def upsample_image(
    img: RasterImage,
    variant: str = "padding",
    combine: str = "fourier_only",
    mixer: Optional[ChannelMixer] = None,
) -> RasterImage:
    """Run one FourierUp variant (or ``"bilinear"``) on an image at unit scale, clamp, requantize."""
    X = image_to_tensor(img)
    if variant == "bilinear":
        Y = spatial_upsample2x(X)
    else:
        Y = run_pipeline(X, mixer, UpsampleConfig(variant, combine)).output
    return tensor_to_image(Y)
