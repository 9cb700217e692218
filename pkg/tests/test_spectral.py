import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import separable_dft
from fourierup.spectral import (
    checkerboard_modulate,
    dft2_oracle,
    fast_path_available,
    fft2,
    fftshift2,
    idft2_oracle,
    ifft2,
    zero_insert2x,
)

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def real_grids(draw, max_side=16):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    return draw(arrays(np.float64, (m, n), elements=finite))


@st.composite
def complex_grids(draw, max_side=16):
    re = draw(real_grids(max_side))
    im = draw(arrays(np.float64, re.shape, elements=finite))
    return re + 1j * im


def test_oracle_single_sample():
    assert dft2_oracle([[3 - 2j]]) == pytest.approx(np.array([[3 - 2j]]))
    assert idft2_oracle([[3 - 2j]]) == pytest.approx(np.array([[3 - 2j]]))


def test_oracle_all_ones():
    F = dft2_oracle(np.ones((4, 4)))
    expected = np.zeros((4, 4), complex)
    expected[0, 0] = 16
    np.testing.assert_allclose(F, expected, atol=1e-12)


def test_oracle_two_by_two():
    # hand sums: F(0,0)=1+2+3+4, F(0,1)=1-2+3-4, F(1,0)=1+2-3-4, F(1,1)=1-2-3+4
    g = np.array([[1.0, 2.0], [3.0, 4.0]])
    expected = np.array([[10, -2], [-4, 0]], dtype=complex)
    np.testing.assert_allclose(dft2_oracle(g), expected, atol=1e-12)
    np.testing.assert_allclose(separable_dft(g), expected, atol=1e-12)


def test_idft_of_scaled_delta_is_ones():
    F = np.zeros((3, 5), complex)
    F[0, 0] = 15
    np.testing.assert_allclose(idft2_oracle(F), np.ones((3, 5)), atol=1e-12)


def test_oracle_round_trip_5x3(rng):
    g = rng.uniform(-1, 1, (5, 3))
    assert np.max(np.abs(idft2_oracle(dft2_oracle(g)) - g)) <= 1e-12


def test_oracle_matches_separable_route(rng):
    g = rng.uniform(-1, 1, (7, 6)) + 1j * rng.uniform(-1, 1, (7, 6))
    np.testing.assert_allclose(dft2_oracle(g), separable_dft(g), atol=1e-11)
    np.testing.assert_allclose(idft2_oracle(g), separable_dft(g, +1.0) / 42, atol=1e-12)


@pytest.mark.parametrize("bad", [np.zeros((0, 3)), np.zeros((3, 0)), np.zeros(4), np.zeros((2, 2, 2))])
def test_oracle_rejects_empty_or_wrong_rank(bad):
    with pytest.raises(ValueError):
        dft2_oracle(bad)
    with pytest.raises(ValueError):
        idft2_oracle(bad)


def test_oracle_rejects_non_finite():
    with pytest.raises(ValueError):
        dft2_oracle([[1.0, np.nan]])
    with pytest.raises(ValueError):
        fft2([[np.inf, 1.0]])


def test_fft_delta_gives_flat_spectrum():
    g = np.zeros((8, 8))
    g[0, 0] = 1
    np.testing.assert_allclose(fft2(g), np.ones((8, 8)), atol=1e-15)


def test_fft_random_16_matches_oracle(rng):
    g = rng.uniform(-1, 1, (16, 16))
    assert np.max(np.abs(fft2(g) - dft2_oracle(g))) <= 1e-10


@pytest.mark.parametrize("m", [1, 2, 4, 8, 16, 32])
@pytest.mark.parametrize("n", [1, 2, 4, 8, 16, 32])
def test_fft_power_of_two_sizes(m, n, rng):
    g = rng.uniform(-1, 1, (m, n)) + 1j * rng.uniform(-1, 1, (m, n))
    assert fast_path_available(g.shape)
    assert np.max(np.abs(fft2(g) - dft2_oracle(g))) <= 1e-10
    assert np.max(np.abs(ifft2(g) - idft2_oracle(g))) <= 1e-10
    # a third route to make sure oracle and kernel do not share a mistake
    assert np.max(np.abs(fft2(g) - np.fft.fft2(g))) <= 1e-10


def test_fft_fallback_is_the_oracle(rng):
    g = rng.uniform(-1, 1, (6, 6))
    assert not fast_path_available(g.shape)
    assert np.array_equal(fft2(g), dft2_oracle(g))
    assert np.array_equal(ifft2(g), idft2_oracle(g))


def test_fft_batches_over_leading_axes(rng):
    g = rng.uniform(-1, 1, (3, 8, 4))
    out = fft2(g)
    for c in range(3):
        np.testing.assert_allclose(out[c], dft2_oracle(g[c]), atol=1e-12)


def test_zero_insert_examples():
    np.testing.assert_array_equal(
        zero_insert2x([[1, 2], [3, 4]]),
        [[1, 0, 2, 0], [0, 0, 0, 0], [3, 0, 4, 0], [0, 0, 0, 0]],
    )
    np.testing.assert_array_equal(zero_insert2x([[5 + 1j]]), [[5 + 1j, 0], [0, 0]])
    np.testing.assert_array_equal(zero_insert2x(np.zeros((3, 3))), np.zeros((6, 6)))


def test_fftshift_examples():
    np.testing.assert_array_equal(fftshift2([["a", "b"], ["c", "d"]]), [["d", "c"], ["b", "a"]])
    np.testing.assert_array_equal(fftshift2([[7.0]]), [[7.0]])
    delta = np.zeros((4, 4))
    delta[0, 0] = 1
    shifted = fftshift2(delta)
    assert shifted[2, 2] == 1 and shifted.sum() == 1


def test_fftshift_odd_uses_floor():
    G = np.arange(15).reshape(3, 5)
    out = fftshift2(G)
    for u in range(3):
        for v in range(5):
            assert out[u, v] == G[(u - 1) % 3, (v - 2) % 5]


def test_checkerboard_examples(rng):
    np.testing.assert_array_equal(checkerboard_modulate(np.ones((2, 2))), [[1, -1], [-1, 1]])
    g = rng.uniform(-1, 1, (3, 4))
    np.testing.assert_array_equal(checkerboard_modulate(checkerboard_modulate(g)), g)


def test_half_period_shift_identity_4x4(rng):
    G = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
    err = np.max(np.abs(idft2_oracle(fftshift2(G)) - checkerboard_modulate(idft2_oracle(G))))
    assert err <= 1e-11


@pytest.mark.parametrize("shape", [(2, 2), (2, 6), (4, 8), (6, 6), (8, 4)])
def test_half_period_shift_identity_even_sizes(shape, rng):
    G = rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)
    err = np.max(np.abs(idft2_oracle(fftshift2(G)) - checkerboard_modulate(idft2_oracle(G))))
    assert err <= 1e-11


@settings(max_examples=40, deadline=None)
@given(complex_grids())
def test_round_trip(g):
    back = idft2_oracle(dft2_oracle(g))
    scale = max(1.0, np.max(np.abs(g)))
    assert np.max(np.abs(back - g)) <= 1e-11 * scale


@settings(max_examples=30, deadline=None)
@given(complex_grids(max_side=8), finite, finite, st.data())
def test_linearity(g, a, b, data):
    h = data.draw(arrays(np.float64, g.shape, elements=finite))
    lhs = dft2_oracle(a * g + b * h)
    rhs = a * dft2_oracle(g) + b * dft2_oracle(h)
    scale = max(1.0, np.max(np.abs(lhs)))
    assert np.max(np.abs(lhs - rhs)) <= 1e-11 * scale


@settings(max_examples=40, deadline=None)
@given(complex_grids())
def test_parseval(g):
    G = dft2_oracle(g)
    lhs = np.sum(np.abs(g) ** 2)
    rhs = np.sum(np.abs(G) ** 2) / g.size
    assert abs(lhs - rhs) <= 1e-9 * max(lhs, 1e-300) or lhs == rhs == 0


@settings(max_examples=40, deadline=None)
@given(real_grids())
def test_hermitian_symmetry_of_real_input(g):
    G = dft2_oracle(g)
    M, N = g.shape
    mirrored = G[(-np.arange(M)) % M][:, (-np.arange(N)) % N]
    scale = max(1.0, np.max(np.abs(G)))
    assert np.max(np.abs(mirrored - np.conj(G))) <= 1e-11 * scale


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_fft_matches_oracle_property(p, q, data):
    g = data.draw(arrays(np.float64, (2**p, 2**q), elements=finite))
    scale = max(1.0, np.max(np.abs(g)))
    assert np.max(np.abs(fft2(g) - dft2_oracle(g))) <= 1e-10 * scale
