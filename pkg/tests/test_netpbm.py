import numpy as np
import pytest

from fourierup.netpbm import (
    BadHeaderError,
    BadMagicError,
    MaxvalError,
    PnmError,
    RasterImage,
    TruncatedError,
    load_pnm,
    read_pnm,
    save_pnm,
    write_pnm,
)


def test_binary_gray_single_pixel():
    img = read_pnm(b"P5 1 1 255\n\x7f")
    assert (img.width, img.height, img.channels, img.maxval) == (1, 1, 1, 255)
    assert img.samples[0, 0, 0] == 127


def test_ascii_rgb_single_pixel():
    img = read_pnm(b"P3 1 1 255 10 20 30")
    assert img.channels == 3
    assert tuple(img.samples[0, 0]) == (10, 20, 30)


def test_ascii_gray_with_comments():
    img = read_pnm(b"P2\n# a comment\n3 2 # trailing\n255\n0 1 2\n# mid\n3 4 255\n")
    np.testing.assert_array_equal(img.samples[:, :, 0], [[0, 1, 2], [3, 4, 255]])


def test_binary_header_comment():
    data = b"P6\n# made by hand\n2 1\n255\n" + bytes([1, 2, 3, 4, 5, 6])
    img = read_pnm(data)
    np.testing.assert_array_equal(img.samples, [[[1, 2, 3], [4, 5, 6]]])


def test_binary_payload_may_start_with_whitespace_byte():
    img = read_pnm(b"P5\n2 1\n255\n\x0a\x20")
    np.testing.assert_array_equal(img.samples[0, :, 0], [10, 32])


@pytest.mark.parametrize(
    "data",
    [
        b"P5\n1 1\n255\n\x7f",
        b"P6\n2 2\n255\n" + bytes(range(12)),
        b"P5\n3 1\n255\n\x00\xff\x80",
    ],
)
def test_canonical_round_trip(data):
    assert write_pnm(read_pnm(data)) == data


def test_writer_header():
    img = RasterImage(np.zeros((2, 3, 3), np.uint8))
    assert write_pnm(img).startswith(b"P6\n3 2\n255\n")
    gray = RasterImage(np.zeros((2, 3), np.uint8))
    assert write_pnm(gray).startswith(b"P5\n3 2\n255\n")


def test_ascii_to_binary_preserves_samples():
    img = read_pnm(b"P3 2 1 255 1 2 3 4 5 6")
    again = read_pnm(write_pnm(img))
    np.testing.assert_array_equal(again.samples, img.samples)


@pytest.mark.parametrize(
    "data,exc,code",
    [
        (b"P4\n1 1\n\x00", BadMagicError, "bad_magic"),
        (b"XX", BadMagicError, "bad_magic"),
        (b"", BadMagicError, "bad_magic"),
        (b"P5\n2 2\n255\n\x00\x01", TruncatedError, "truncated"),
        (b"P5\n2 2\n255", TruncatedError, "truncated"),
        (b"P3 1 1 255 1 2", TruncatedError, "truncated"),
        (b"P5\n1 1\n65535\n\x00\x00", MaxvalError, "bad_maxval"),
        (b"P2 1 1 15 3", MaxvalError, "bad_maxval"),
        (b"P2 1 1 255 300", MaxvalError, "bad_maxval"),
        (b"P5\nx 1\n255\n\x00", BadHeaderError, "bad_header"),
        (b"P5\n0 1\n255\n", BadHeaderError, "bad_header"),
    ],
)
def test_errors_have_distinct_codes(data, exc, code):
    with pytest.raises(exc) as info:
        read_pnm(data)
    assert isinstance(info.value, PnmError)
    assert info.value.code == code


def test_raster_validation():
    with pytest.raises(ValueError):
        RasterImage(np.zeros((2, 2, 2), np.uint8))
    with pytest.raises(ValueError):
        RasterImage(np.zeros((2, 2), np.float64))


def test_file_round_trip(tmp_path, fixtures_dir):
    for name in ("astronaut64.pgm", "astronaut64.ppm"):
        raw = (fixtures_dir / name).read_bytes()
        img = load_pnm(fixtures_dir / name)
        save_pnm(tmp_path / name, img)
        assert (tmp_path / name).read_bytes() == raw
