"""Netpbm reader/writer for 8-bit gray (P2/P5) and RGB (P3/P6) images."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "RasterImage",
    "PnmError",
    "BadMagicError",
    "BadHeaderError",
    "TruncatedError",
    "MaxvalError",
    "read_pnm",
    "write_pnm",
    "load_pnm",
    "save_pnm",
]

MAXVAL = 255
_CHANNELS = {b"P2": 1, b"P5": 1, b"P3": 3, b"P6": 3}
_WHITESPACE = b" \t\r\n\x0b\x0c"


class PnmError(ValueError):
    code = "pnm_error"


class BadMagicError(PnmError):
    code = "bad_magic"


class BadHeaderError(PnmError):
    code = "bad_header"


class TruncatedError(PnmError):
    code = "truncated"


class MaxvalError(PnmError):
    code = "bad_maxval"


@dataclass(frozen=True)
class RasterImage:
    """8-bit image; ``samples`` is ``(height, width, channels)`` uint8."""

    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples)
        if s.ndim == 2:
            s = s[:, :, None]
        if s.ndim != 3 or s.shape[2] not in (1, 3) or s.shape[0] < 1 or s.shape[1] < 1:
            raise ValueError(f"samples must be (H, W, 1|3), got shape {s.shape}")
        if s.dtype != np.uint8:
            raise ValueError(f"samples must be uint8, got {s.dtype}")
        s = s.copy()
        s.flags.writeable = False
        object.__setattr__(self, "samples", s)

    @property
    def height(self) -> int:
        return self.samples.shape[0]

    @property
    def width(self) -> int:
        return self.samples.shape[1]

    @property
    def channels(self) -> int:
        return self.samples.shape[2]

    @property
    def maxval(self) -> int:
        return MAXVAL


class _Tokens:
    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos

    def next(self) -> bytes:
        data, n = self.data, len(self.data)
        while self.pos < n:
            ch = data[self.pos:self.pos + 1]
            if ch == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = n if end < 0 else end + 1
            elif ch in _WHITESPACE:
                self.pos += 1
            else:
                break
        start = self.pos
        while self.pos < n and data[self.pos:self.pos + 1] not in _WHITESPACE and data[self.pos:self.pos + 1] != b"#":
            self.pos += 1
        return data[start:self.pos]


def _header_int(tokens: _Tokens, what: str) -> int:
    tok = tokens.next()
    if not tok:
        raise TruncatedError(f"header ends before {what}")
    if not tok.isdigit():
        raise BadHeaderError(f"invalid {what}: {tok!r}")
    return int(tok)


def read_pnm(data: bytes) -> RasterImage:
    magic = data[:2]
    if magic not in _CHANNELS:
        raise BadMagicError(f"unsupported magic {magic!r}; expected P2, P3, P5 or P6")
    channels = _CHANNELS[magic]
    tokens = _Tokens(data, 2)
    width = _header_int(tokens, "width")
    height = _header_int(tokens, "height")
    maxval = _header_int(tokens, "maxval")
    if width < 1 or height < 1:
        raise BadHeaderError(f"image size must be positive, got {width}x{height}")
    if maxval != MAXVAL:
        raise MaxvalError(f"maxval must be {MAXVAL}, got {maxval}")
    count = width * height * channels

    if magic in (b"P5", b"P6"):
        # exactly one whitespace byte separates the header from the raster
        start = tokens.pos + 1
        payload = data[start:start + count]
        if tokens.pos >= len(data) or len(payload) < count:
            raise TruncatedError(f"expected {count} raster bytes, found {max(0, len(data) - start)}")
        values = np.frombuffer(payload, dtype=np.uint8)
    else:
        values = []
        for _ in range(count):
            tok = tokens.next()
            if not tok:
                raise TruncatedError(f"expected {count} samples, found {len(values)}")
            if not tok.isdigit():
                raise BadHeaderError(f"invalid sample {tok!r}")
            v = int(tok)
            if v > MAXVAL:
                raise MaxvalError(f"sample {v} exceeds maxval {MAXVAL}")
            values.append(v)
        values = np.array(values, dtype=np.uint8)
    return RasterImage(values.reshape(height, width, channels))


def write_pnm(img: RasterImage) -> bytes:
    """Binary encoding: P5 for gray, P6 for RGB."""
    magic = b"P5" if img.channels == 1 else b"P6"
    header = magic + b"\n%d %d\n%d\n" % (img.width, img.height, MAXVAL)
    return header + np.ascontiguousarray(img.samples).tobytes()


def load_pnm(path) -> RasterImage:
    with open(path, "rb") as fh:
        return read_pnm(fh.read())


def save_pnm(path, img: RasterImage) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pnm(img))
