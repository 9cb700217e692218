"""Dense 2-D discrete Fourier transforms on complex grids.

Convention used everywhere in the package: the forward transform is
unnormalized and the inverse carries the ``1/(M*N)`` factor::

    F(u, v) = sum_{x,y} g(x, y) exp(-2j*pi*(u*x/M + v*y/N))
    g(x, y) = 1/(M*N) * sum_{u,v} F(u, v) exp(+2j*pi*(u*x/M + v*y/N))

Two independent routes compute these transforms. ``dft2_oracle`` and
``idft2_oracle`` evaluate the double sum directly (O(M^2 N^2)); ``fft2`` and
``ifft2`` run an iterative radix-2 Cooley-Tukey kernel along each axis and
fall back to the oracle when a dimension is not a power of two.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_complex_grid",
    "dft2_oracle",
    "idft2_oracle",
    "fft2",
    "ifft2",
    "fast_path_available",
    "zero_insert2x",
    "fftshift2",
    "checkerboard_modulate",
]


def as_complex_grid(g, name: str = "grid") -> np.ndarray:
    """Validate ``g`` as an M x N grid of finite samples and return it as complex128."""
    arr = np.asarray(g)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{name} must be non-empty, got shape {arr.shape}")
    arr = arr.astype(np.complex128, copy=True)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite samples")
    return arr


def _as_stack(g, name: str) -> np.ndarray:
    # grids with optional leading batch axes; transforms act on the last two
    arr = np.asarray(g)
    if arr.ndim < 2 or arr.shape[-1] < 1 or arr.shape[-2] < 1:
        raise ValueError(f"{name} must have two non-empty trailing axes, got shape {arr.shape}")
    arr = arr.astype(np.complex128, copy=True)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite samples")
    return arr


def _twiddle_phase(k: np.ndarray, n: int) -> np.ndarray:
    # reduce k modulo n in integers before scaling so large products keep full precision
    return 2.0 * np.pi * (np.mod(k, n) / n)


def _direct_sum(g: np.ndarray, sign: float) -> np.ndarray:
    M, N = g.shape
    x = np.arange(M)
    y = np.arange(N)
    v = np.arange(N)
    # phase_y[v, y] for the column term, reused for every output row
    col_kernel = np.exp(sign * 1j * _twiddle_phase(np.outer(v, y), N))
    out = np.empty((M, N), dtype=np.complex128)
    for u in range(M):
        row_kernel = np.exp(sign * 1j * _twiddle_phase(u * x, M))
        # kernel[v, x, y] = exp(sign*j*2pi*(u*x/M + v*y/N)); one full double sum per (u, v)
        kernel = row_kernel[None, :, None] * col_kernel[:, None, :]
        out[u] = np.einsum("vxy,xy->v", kernel, g)
    return out


def dft2_oracle(g) -> np.ndarray:
    """Forward 2-D DFT by the direct double sum. Unnormalized."""
    g = as_complex_grid(g, "g")
    return _direct_sum(g, -1.0)


def idft2_oracle(F) -> np.ndarray:
    """Inverse 2-D DFT by the direct double sum, scaled by ``1/(M*N)``."""
    F = as_complex_grid(F, "F")
    M, N = F.shape
    return _direct_sum(F, +1.0) / (M * N)


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def fast_path_available(shape) -> bool:
    """True when ``fft2``/``ifft2`` use the radix-2 kernel for grids of this shape.

    Any other shape is routed through the direct-sum oracle.
    """
    rows, cols = shape[-2], shape[-1]
    return _is_pow2(int(rows)) and _is_pow2(int(cols))


def _bit_reverse_indices(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _radix2_last_axis(a: np.ndarray, sign: float) -> np.ndarray:
    """Decimation-in-time radix-2 transform along the last axis (length a power of two)."""
    n = a.shape[-1]
    if n == 1:
        return a.copy()
    lead = a.shape[:-1]
    out = a[..., _bit_reverse_indices(n)]
    m = 2
    while m <= n:
        half = m // 2
        w = np.exp(sign * 1j * _twiddle_phase(np.arange(half), m))
        blocks = out.reshape(*lead, n // m, m)
        even = blocks[..., :half]
        odd = blocks[..., half:] * w
        out = np.concatenate([even + odd, even - odd], axis=-1).reshape(*lead, n)
        m *= 2
    return out


def _fast2(a: np.ndarray, sign: float) -> np.ndarray:
    a = _radix2_last_axis(a, sign)
    a = np.swapaxes(_radix2_last_axis(np.swapaxes(a, -1, -2), sign), -1, -2)
    return a


def _oracle_stack(a: np.ndarray, fn) -> np.ndarray:
    flat = a.reshape(-1, *a.shape[-2:])
    return np.stack([fn(grid) for grid in flat]).reshape(a.shape)


def fft2(g) -> np.ndarray:
    """Forward 2-D DFT over the last two axes.

    Leading axes are treated as a batch. Non power-of-two shapes are
    computed with :func:`dft2_oracle`; see :func:`fast_path_available`.
    """
    a = _as_stack(g, "g")
    if not fast_path_available(a.shape):
        return _oracle_stack(a, dft2_oracle)
    return _fast2(a, -1.0)


def ifft2(F) -> np.ndarray:
    """Inverse 2-D DFT over the last two axes, scaled by ``1/(M*N)``."""
    a = _as_stack(F, "F")
    if not fast_path_available(a.shape):
        return _oracle_stack(a, idft2_oracle)
    M, N = a.shape[-2:]
    return _fast2(a, +1.0) / (M * N)


def zero_insert2x(g) -> np.ndarray:
    """Place ``g(x, y)`` at ``(2x, 2y)`` of a zero grid twice the size."""
    g = np.asarray(g)
    out = np.zeros(g.shape[:-2] + (2 * g.shape[-2], 2 * g.shape[-1]), dtype=np.result_type(g, np.float64))
    out[..., ::2, ::2] = g
    return out


def fftshift2(G) -> np.ndarray:
    """Circular shift by ``(M // 2, N // 2)``: ``out(u, v) = G(u - M//2, v - N//2)``."""
    G = np.asarray(G)
    M, N = G.shape[-2:]
    return np.roll(G, (M // 2, N // 2), axis=(-2, -1))


def checkerboard_modulate(g) -> np.ndarray:
    """Multiply each sample by ``(-1) ** (x + y)``."""
    g = np.asarray(g)
    M, N = g.shape[-2:]
    sign = 1 - 2 * ((np.arange(M)[:, None] + np.arange(N)[None, :]) % 2)
    return g * sign
