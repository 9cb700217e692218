"""Executable checks of the up-sampling identities.

Every checker draws its inputs from its own ``numpy.random.Generator``
seeded with ``PCG64(seed)``, samples uniform on [-1, 1), so a report is
reproducible bit-for-bit from ``(sizes, trials, seed)``. Checks are run in a
fixed order: sizes as given, then trials.

A report may aggregate sub-checks that carry their own tolerances. The
aggregate ``max_error`` is then stated on the scale of the aggregate
``tolerance`` (each sub-check error multiplied by ``tolerance / sub_tolerance``),
so ``passed`` is always exactly ``max_error <= tolerance``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .pipelines import COMBINES, VARIANTS, ChannelMixer, UpsampleConfig, mixer_gradient, run_pipeline
from .rules import a_factor, area_interpolate2x, corner_interpolate2x, periodic_pad2x
from .spectral import checkerboard_modulate, dft2_oracle, fftshift2, idft2_oracle, zero_insert2x

__all__ = [
    "VerificationReport",
    "parse_report_line",
    "make_rng",
    "uniform_sampler",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_gradient",
    "gradient_relative_error",
    "run_all",
    "THEOREM1_TOL",
    "THEOREM2_TOL",
    "THEOREM3_TOL",
    "GRADIENT_TOL",
]

THEOREM1_TOL = 1e-10
THEOREM2_TOL = 1e-9
A_SYMMETRY_TOL = 1e-12
ZERO_TOL = 1e-10
MONOTONE_TOL = 1e-12
THEOREM3_TOL = 1e-9
REALNESS_TOL = 1e-10
SHIFT_TOL = 1e-11
GRADIENT_TOL = 1e-5
STATIONARY_TOL = 1e-12
FD_STEP = 1e-5

Sampler = Callable[[np.random.Generator, tuple], np.ndarray]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def uniform_sampler(rng: np.random.Generator, shape: tuple) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, size=shape)


@dataclass(frozen=True)
class VerificationReport:
    name: str
    sizes_tested: tuple
    max_error: float
    tolerance: float
    checks: tuple = field(default=(), compare=True)

    def __post_init__(self):
        if not self.sizes_tested:
            raise ValueError("a report needs at least one tested size")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if not self.max_error >= 0:
            raise ValueError(f"max_error must be a nonnegative number, got {self.max_error}")
        object.__setattr__(self, "sizes_tested", tuple((int(m), int(n)) for m, n in self.sizes_tested))

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance

    def to_line(self) -> str:
        sizes = "[" + ",".join(f"({m},{n})" for m, n in self.sizes_tested) + "]"
        return (
            f"name={self.name} sizes={sizes} max_error={self.max_error!r} "
            f"tol={self.tolerance!r} passed={str(self.passed).lower()}"
        )

    def lines(self) -> list[str]:
        """The report line followed by one line per sub-check."""
        return [self.to_line()] + [c.to_line() for c in self.checks]


_LINE = re.compile(
    r"^name=(?P<name>\S+) sizes=(?P<sizes>\[\S*\]) max_error=(?P<err>\S+) tol=(?P<tol>\S+) passed=(?P<passed>true|false)$"
)


def parse_report_line(line: str) -> VerificationReport:
    m = _LINE.match(line.strip())
    if not m:
        raise ValueError(f"not a report line: {line!r}")
    sizes = tuple((int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", m["sizes"]))
    report = VerificationReport(m["name"], sizes, float(m["err"]), float(m["tol"]))
    if str(report.passed).lower() != m["passed"]:
        raise ValueError(f"inconsistent passed flag in {line!r}")
    return report


class _Tracker:
    """Running maximum of one sub-check."""

    def __init__(self, name: str, tol: float):
        self.name = name
        self.tol = tol
        self.err = 0.0
        self.sizes: list[tuple[int, int]] = []

    def update(self, err: float, size) -> None:
        err = float(err)
        if not np.isfinite(err):
            err = float("inf")
        self.err = max(self.err, err)
        if tuple(size) not in self.sizes:
            self.sizes.append(tuple(size))

    def report(self, prefix: str) -> Optional[VerificationReport]:
        if not self.sizes:
            return None
        return VerificationReport(f"{prefix}.{self.name}", tuple(self.sizes), self.err, self.tol)


def _aggregate(name: str, sizes, tol: float, trackers: Iterable[_Tracker]) -> VerificationReport:
    checks = tuple(r for r in (t.report(name) for t in trackers) if r is not None)
    worst = max((c.max_error * (tol / c.tolerance) for c in checks), default=0.0)
    return VerificationReport(name, tuple(sizes), worst, tol, checks)


def _complex_rule(rule, G: np.ndarray) -> np.ndarray:
    return rule(G.real) + 1j * rule(G.imag)


def _check_sizes(sizes, trials: int) -> list[tuple[int, int]]:
    sizes = [(int(m), int(n)) for m, n in sizes]
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if any(m < 1 or n < 1 for m, n in sizes):
        raise ValueError("sizes must be positive")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return sizes


def verify_theorem1(sizes, trials: int = 5, seed: int = 0, sampler: Sampler = uniform_sampler) -> VerificationReport:
    """Zero insertion in space is periodic padding of the spectrum.

    For random real ``g``, checks that the transform of ``zero_insert2x(g)`` is
    periodic with periods (M, N) and equals ``periodic_pad2x`` of the
    transform of ``g``.
    """
    sizes = _check_sizes(sizes, trials)
    rng = make_rng(seed)
    periodic = _Tracker("periodicity", THEOREM1_TOL)
    padding = _Tracker("periodic_padding", THEOREM1_TOL)
    for M, N in sizes:
        for _ in range(trials):
            g = sampler(rng, (M, N))
            F = dft2_oracle(zero_insert2x(g))
            base = F[:M, :N]
            periodic.update(
                max(np.max(np.abs(F[M:, :N] - base)), np.max(np.abs(F[:M, N:] - base)), np.max(np.abs(F[M:, N:] - base))),
                (M, N),
            )
            padding.update(np.max(np.abs(F - _complex_rule(periodic_pad2x, dft2_oracle(g)))), (M, N))
    return _aggregate("theorem1", sizes, THEOREM1_TOL, [periodic, padding])


def _a_magnitude_checks(M: int, N: int, symmetry: _Tracker, zeros: _Tracker, monotone: _Tracker) -> None:
    x = np.arange(2 * M + 1)[:, None]
    y = np.arange(2 * N + 1)[None, :]
    mag = np.abs(a_factor(x, y, M, N))
    sym = max(
        np.max(np.abs(mag - np.abs(a_factor(2 * M - x, y, M, N)))),
        np.max(np.abs(mag - np.abs(a_factor(x, 2 * N - y, M, N)))),
        np.max(np.abs(mag - np.abs(a_factor(2 * M - x, 2 * N - y, M, N)))),
    )
    symmetry.update(sym, (M, N))
    zeros.update(max(np.max(mag[M, :]), np.max(mag[:, N])), (M, N))
    # non-increasing from the edge (0) to the centre line (M or N), other coordinate inside the first period
    rise_x = np.max(np.maximum(0.0, np.diff(mag[: M + 1, :N], axis=0)), initial=0.0)
    rise_y = np.max(np.maximum(0.0, np.diff(mag[:M, : N + 1], axis=1)), initial=0.0)
    monotone.update(max(rise_x, rise_y), (M, N))


def verify_theorem2(sizes, trials: int = 3, seed: int = 0, sampler: Sampler = uniform_sampler) -> VerificationReport:
    """Area interpolation of the spectrum scales space by ``A(x, y) / 4``.

    With ``H`` the 2x2 block replication of ``G`` and ``h`` its inverse, checks
    ``h(x, y) = A(x, y)/4 * g(x mod M, y mod N)`` at every point of the
    2M x 2N grid (all four quadrants), the zero lines ``h(M, .)`` and
    ``h(., N)``, and the symmetry, zeros and monotone decay of ``|A|``.
    """
    sizes = _check_sizes(sizes, trials)
    rng = make_rng(seed)
    quadrant = _Tracker("quadrant_law", THEOREM2_TOL)
    zero_line = _Tracker("zero_line", ZERO_TOL)
    symmetry = _Tracker("a_symmetry", A_SYMMETRY_TOL)
    zeros = _Tracker("a_zeros", ZERO_TOL)
    monotone = _Tracker("a_monotone", MONOTONE_TOL)
    for M, N in sizes:
        _a_magnitude_checks(M, N, symmetry, zeros, monotone)
        x = np.arange(2 * M)[:, None]
        y = np.arange(2 * N)[None, :]
        gain = a_factor(x, y, M, N) / 4.0
        for _ in range(trials):
            g = sampler(rng, (M, N))
            h = idft2_oracle(_complex_rule(area_interpolate2x, dft2_oracle(g)))
            quadrant.update(np.max(np.abs(h - gain * g[x % M, y % N])), (M, N))
            zero_line.update(max(np.max(np.abs(h[M, :])), np.max(np.abs(h[:, N]))), (M, N))
    return _aggregate("theorem2", sizes, THEOREM2_TOL, [quadrant, zero_line, symmetry, zeros, monotone])


def verify_theorem3(sizes, trials: int = 3, seed: int = 0, sampler: Sampler = uniform_sampler) -> VerificationReport:
    """Corner interpolation (spectral zero padding) keeps ``g / 4`` on the even lattice.

    For every size: ``f(2x, 2y) = g(x, y) / 4``, all samples finite, and the
    inverse is real. For sizes even in both axes the half-period shift
    identity ``inverse(fftshift2(G)) = (-1)^(x+y) * inverse(G)`` is also
    checked on random complex spectra.
    """
    sizes = _check_sizes(sizes, trials)
    rng = make_rng(seed)
    lattice = _Tracker("even_lattice", THEOREM3_TOL)
    finite = _Tracker("odd_points_finite", THEOREM3_TOL)
    realness = _Tracker("realness", REALNESS_TOL)
    shift = _Tracker("shift_identity", SHIFT_TOL)
    for M, N in sizes:
        for _ in range(trials):
            g = sampler(rng, (M, N))
            f = idft2_oracle(_complex_rule(corner_interpolate2x, dft2_oracle(g)))
            lattice.update(np.max(np.abs(f[::2, ::2] - g / 4.0)), (M, N))
            finite.update(0.0 if np.all(np.isfinite(f)) else np.inf, (M, N))
            realness.update(np.max(np.abs(f.imag)), (M, N))
            if M % 2 == 0 and N % 2 == 0:
                G = sampler(rng, (M, N)) + 1j * sampler(rng, (M, N))
                shift.update(np.max(np.abs(idft2_oracle(fftshift2(G)) - checkerboard_modulate(idft2_oracle(G)))), (M, N))
    return _aggregate("theorem3", sizes, THEOREM3_TOL, [lattice, finite, realness, shift])


def gradient_relative_error(a, b) -> float:
    """Worst entry-wise relative error between two gradients.

    Entries smaller than 1e-3 of the largest entry are measured against that
    floor instead, since finite differences cannot resolve structural zeros
    below their roundoff level.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    floor = max(1e-3 * max(np.max(np.abs(a)), np.max(np.abs(b))), 1e-12)
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), floor)
    return float(np.max(np.abs(a - b) / scale))


def _finite_difference(X, m: ChannelMixer, target, cfg, step: float):
    grads = []
    for which in (0, 1):
        base = (m.amp_weights, m.phase_weights)[which]
        g = np.zeros_like(base)
        for idx in np.ndindex(base.shape):
            losses = []
            for sgn in (1.0, -1.0):
                w = [m.amp_weights.copy(), m.phase_weights.copy()]
                w[which][idx] += sgn * step
                losses.append(mixer_gradient(X, ChannelMixer(*w), target, cfg)[0])
            g[idx] = (losses[0] - losses[1]) / (2 * step)
        grads.append(g)
    return grads


def verify_gradient(trials: int = 1, seed: int = 0, channels=(1, 2, 3), size=(4, 4)) -> VerificationReport:
    """Analytic mixer gradients against central finite differences.

    Covers every variant and combine mode for each channel count. Also checks
    that gradients vanish when the target equals the pipeline output and
    that perturbing one mixer entry away from that point gives positive loss.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = make_rng(seed)
    H, W = size
    fd = _Tracker("finite_difference", GRADIENT_TOL)
    stationary = _Tracker("stationary", STATIONARY_TOL)
    positive = _Tracker("perturbed_loss_positive", GRADIENT_TOL)
    for _ in range(trials):
        for variant in VARIANTS:
            for combine in COMBINES:
                cfg = UpsampleConfig(variant, combine)
                for C in channels:
                    X = rng.uniform(-1.0, 1.0, (C, H, W))
                    m = ChannelMixer(
                        np.eye(C) + 0.5 * rng.uniform(-1.0, 1.0, (C, C)),
                        np.eye(C) + 0.5 * rng.uniform(-1.0, 1.0, (C, C)),
                    )
                    target = rng.uniform(-1.0, 1.0, (C, 2 * H, 2 * W))
                    _, ga, gp = mixer_gradient(X, m, target, cfg)
                    na, np_ = _finite_difference(X, m, target, cfg, FD_STEP)
                    fd.update(max(gradient_relative_error(ga, na), gradient_relative_error(gp, np_)), (H, W))

                    exact = run_pipeline(X, m, cfg).output
                    loss0, ga0, gp0 = mixer_gradient(X, m, exact, cfg)
                    stationary.update(max(abs(loss0), np.max(np.abs(ga0)), np.max(np.abs(gp0))), (H, W))
                    w = m.amp_weights.copy()
                    w[0, 0] += 1e-3
                    bumped = mixer_gradient(X, ChannelMixer(w, m.phase_weights), exact, cfg)[0]
                    positive.update(0.0 if bumped > 0.0 else np.inf, (H, W))
    return _aggregate("gradient", [(H, W)], GRADIENT_TOL, [fd, stationary, positive])


ACCEPTANCE_SIZES_T1 = [(m, n) for m in range(1, 9) for n in range(1, 9)]
ACCEPTANCE_SIZES_T2 = ACCEPTANCE_SIZES_T1
ACCEPTANCE_SIZES_T3 = [(m, n) for m in (1, 3, 5, 7) for n in (1, 3, 5, 7)] + [
    (m, n) for m in (2, 4, 6, 8) for n in (2, 4, 6, 8)
]


def run_all(seed: int = 0, theorems: Iterable[str] = ("1", "2", "3", "grad")) -> list[VerificationReport]:
    """Default suite used by ``fourierup verify``."""
    runners = {
        "1": lambda: verify_theorem1(ACCEPTANCE_SIZES_T1, trials=5, seed=seed),
        "2": lambda: verify_theorem2(ACCEPTANCE_SIZES_T2, trials=3, seed=seed),
        "3": lambda: verify_theorem3(ACCEPTANCE_SIZES_T3, trials=3, seed=seed),
        "grad": lambda: verify_gradient(trials=1, seed=seed),
    }
    return [runners[t]() for t in theorems]
