"""2x dimension-increase rules for spectral maps, and spatial post-processing.

The three rules act on real grids (amplitude, phase, or the real and
imaginary parts of a spectrum). All of them are linear maps, so applying a
rule to Re and Im separately equals applying it to the complex spectrum.
Every function accepts optional leading batch axes and works on the last two.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "periodic_pad2x",
    "area_interpolate2x",
    "corner_interpolate2x",
    "corner_split_indices",
    "a_factor",
    "a_factor_sq_gradient",
    "bilinear_weights",
    "bilinear_resize",
    "bilinear_resize_adjoint",
    "default_crop",
    "corner_crop_merge",
    "corner_crop_merge_adjoint",
    "corner_crop_merge_resize",
    "corner_crop_merge_resize_adjoint",
]


def _grid(G) -> np.ndarray:
    G = np.asarray(G)
    if G.ndim < 2 or G.shape[-1] < 1 or G.shape[-2] < 1:
        raise ValueError(f"expected a non-empty grid, got shape {G.shape}")
    return G


def periodic_pad2x(G) -> np.ndarray:
    """Tile ``G`` 2x2: ``out(u, v) = G(u mod M, v mod N)``."""
    G = _grid(G)
    reps = (1,) * (G.ndim - 2) + (2, 2)
    return np.tile(G, reps)


def area_interpolate2x(G) -> np.ndarray:
    """Replicate every sample into a 2x2 block (nearest-neighbour 2x)."""
    G = _grid(G)
    return np.repeat(np.repeat(G, 2, axis=-2), 2, axis=-1)


def corner_split_indices(n: int) -> tuple[int, int]:
    """Return ``(i1, i2)``: the first ``i1`` bins stay at the low corner, bins
    from ``i2`` on move to ``i2 + n``. For even ``n`` the Nyquist bin ``n // 2``
    is copied to both ends."""
    if n % 2:
        return n // 2 + 1, n // 2 + 1
    return n // 2 + 1, n // 2


def corner_interpolate2x(G, split_nyquist: bool = True) -> np.ndarray:
    """Place the four corner blocks of ``G`` into the corners of a 2M x 2N zero grid.

    For an even dimension the Nyquist row (column) lands twice, at ``i2`` and
    ``i2 + n``; with ``split_nyquist`` both copies are scaled by 0.5 so the
    result is the classical zero-padded spectrum and keeps Hermitian symmetry.
    Pass ``split_nyquist=False`` for maps that must not be scaled, e.g. phase.
    """
    G = _grid(G)
    r, c = G.shape[-2:]
    ir1, ir2 = corner_split_indices(r)
    ic1, ic2 = corner_split_indices(c)
    out = np.zeros(G.shape[:-2] + (2 * r, 2 * c), dtype=np.result_type(G, np.float64))
    out[..., :ir1, :ic1] = G[..., :ir1, :ic1]
    out[..., :ir1, ic2 + c:] = G[..., :ir1, ic2:]
    out[..., ir2 + r:, :ic1] = G[..., ir2:, :ic1]
    out[..., ir2 + r:, ic2 + c:] = G[..., ir2:, ic2:]
    if split_nyquist:
        if r % 2 == 0:
            out[..., ir2, :] *= 0.5
            out[..., ir2 + r, :] *= 0.5
        if c % 2 == 0:
            out[..., :, ic2] *= 0.5
            out[..., :, ic2 + c] *= 0.5
    return out


def a_factor(x, y, M: int, N: int):
    """Spatial gain of area interpolation: ``1 + e^{j pi x/M} + e^{j pi y/N} + e^{j pi (x/M + y/N)}``.

    Broadcasts over array-valued ``x`` and ``y``.
    """
    if M < 1 or N < 1:
        raise ValueError("M and N must be positive")
    ex = np.exp(1j * np.pi * np.asarray(x, dtype=np.float64) / M)
    ey = np.exp(1j * np.pi * np.asarray(y, dtype=np.float64) / N)
    val = 1.0 + ex + ey + ex * ey
    return complex(val) if np.ndim(val) == 0 else val


def a_factor_sq_gradient(x, y, M: int, N: int):
    """Closed-form ``(d|A|^2/dx, d|A|^2/dy)`` treating x and y as continuous."""
    ax = np.pi * np.asarray(x, dtype=np.float64) / M
    ay = np.pi * np.asarray(y, dtype=np.float64) / N
    dx = -4.0 * np.pi / M * np.sin(ax) * (1.0 + np.cos(ay))
    dy = -4.0 * np.pi / N * np.sin(ay) * (1.0 + np.cos(ax))
    return dx, dy


def bilinear_weights(n_in: int, n_out: int) -> np.ndarray:
    """``n_out x n_in`` matrix of 1-D linear interpolation with half-pixel centres
    and edge clamping."""
    if n_in < 1 or n_out < 1:
        raise ValueError("sizes must be positive")
    t = np.arange(n_out, dtype=np.float64)
    s = np.clip((t + 0.5) * (n_in / n_out) - 0.5, 0.0, n_in - 1)
    i0 = np.floor(s).astype(np.int64)
    i1 = np.minimum(i0 + 1, n_in - 1)
    w = s - i0
    W = np.zeros((n_out, n_in))
    rows = np.arange(n_out)
    np.add.at(W, (rows, i0), 1.0 - w)
    np.add.at(W, (rows, i1), w)
    return W


def bilinear_resize(g, out_rows: int, out_cols: int) -> np.ndarray:
    g = _grid(g)
    if out_rows < 1 or out_cols < 1:
        raise ValueError("target shape must be positive")
    Wr = bilinear_weights(g.shape[-2], out_rows)
    Wc = bilinear_weights(g.shape[-1], out_cols)
    return Wr @ g @ Wc.T


def bilinear_resize_adjoint(d, in_rows: int, in_cols: int) -> np.ndarray:
    """Transpose of :func:`bilinear_resize` from ``(in_rows, in_cols)`` to ``d.shape``."""
    d = _grid(d)
    Wr = bilinear_weights(in_rows, d.shape[-2])
    Wc = bilinear_weights(in_cols, d.shape[-1])
    return Wr.T @ d @ Wc


def default_crop(M: int, N: int) -> tuple[int, int]:
    return math.ceil(M / 2), math.ceil(N / 2)


def _check_crop(shape, crop) -> tuple[int, int, int, int]:
    H, W = shape[-2:]
    if H % 2 or W % 2:
        raise ValueError(f"expected an even 2M x 2N grid, got {H}x{W}")
    M, N = H // 2, W // 2
    if crop is None:
        crop = default_crop(M, N)
    cr, cc = (int(v) for v in crop)
    if cr < 1 or cc < 1:
        raise ValueError(f"crop must be positive, got {crop}")
    if cr > M or cc > N:
        raise ValueError(f"crop {crop} exceeds the {M}x{N} quadrant")
    return M, N, cr, cc


def corner_crop_merge(h, crop=None) -> np.ndarray:
    """Cut the four ``crop``-sized corners out of ``h`` and butt them together,
    each keeping its corner position. Result is ``2*crop``."""
    h = _grid(h)
    M, N, cr, cc = _check_crop(h.shape, crop)
    H, W = h.shape[-2:]
    out = np.empty(h.shape[:-2] + (2 * cr, 2 * cc), dtype=h.dtype)
    out[..., :cr, :cc] = h[..., :cr, :cc]
    out[..., :cr, cc:] = h[..., :cr, W - cc:]
    out[..., cr:, :cc] = h[..., H - cr:, :cc]
    out[..., cr:, cc:] = h[..., H - cr:, W - cc:]
    return out


def corner_crop_merge_adjoint(d, shape, crop=None) -> np.ndarray:
    """Transpose of :func:`corner_crop_merge`: scatter-add ``d`` back into a zero grid of ``shape``."""
    d = np.asarray(d)
    M, N, cr, cc = _check_crop(shape, crop)
    H, W = shape[-2:]
    out = np.zeros(d.shape[:-2] + (H, W), dtype=d.dtype)
    out[..., :cr, :cc] += d[..., :cr, :cc]
    out[..., :cr, W - cc:] += d[..., :cr, cc:]
    out[..., H - cr:, :cc] += d[..., cr:, :cc]
    out[..., H - cr:, W - cc:] += d[..., cr:, cc:]
    return out


def corner_crop_merge_resize(h, crop=None) -> np.ndarray:
    """Area cropping: merge the four corners of ``h`` and resize back to ``h``'s shape."""
    h = _grid(h)
    merged = corner_crop_merge(h, crop)
    return bilinear_resize(merged, h.shape[-2], h.shape[-1])


def corner_crop_merge_resize_adjoint(d, crop=None) -> np.ndarray:
    d = _grid(d)
    M, N, cr, cc = _check_crop(d.shape, crop)
    back = bilinear_resize_adjoint(d, 2 * cr, 2 * cc)
    return corner_crop_merge_adjoint(back, d.shape, (cr, cc))
