"""Least-squares FIR design that flattens CIC passband droop.

The compensator runs at the decimated rate, so its frequencies are
normalized to the *output* sample rate; an output-rate frequency g sees the
CIC response at the input-rate frequency g/R.  Taps are symmetric (linear
phase, odd length), parameterized by their independent half and fit so that
FIR(g) * CIC(g/R) tracks 1 over the requested passband.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import CicConfig, ConfigError, validate
from .analysis import DomainError, ResponseCurve, magnitude, phase, to_db


@dataclass(frozen=True)
class FirFilter:
    """Real FIR coefficients operating at the decimated (output) rate."""

    taps: list[float]

    def __len__(self) -> int:
        return len(self.taps)

    def dc_gain(self) -> float:
        return float(sum(self.taps))

    def response_at(self, g: float) -> complex:
        """Complex frequency response at output-rate frequency g."""
        return sum(
            t * cmath.exp(-2j * math.pi * g * k) for k, t in enumerate(self.taps)
        )


def design_compensator(
    config: CicConfig, tap_count: int, fp_out: float, grid_size: int = 201
) -> FirFilter:
    """Fit a symmetric `tap_count`-tap FIR so the cascade is flat on [0, fp_out].

    Unweighted least squares on a uniform grid: minimize the sum over grid
    frequencies g of (A(g) * cic(g/R) - 1)**2, where A is the zero-phase
    amplitude of the symmetric FIR.  Solved by SVD (numpy lstsq); the cosine
    design matrix is too ill-conditioned for normal equations once the tap
    count grows.
    """
    validate(config)
    if tap_count < 1 or tap_count % 2 == 0:
        raise ConfigError(f"tap_count must be odd and >= 1, got {tap_count}")
    if not 0.0 < fp_out < 0.5:
        raise DomainError(f"fp_out {fp_out} outside (0, 0.5)")
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")

    half = tap_count // 2
    grid = np.linspace(0.0, fp_out, grid_size)
    cic_mag = np.array([magnitude(config, g / config.rate) for g in grid])

    # Zero-phase amplitude A(g) = p[0] + sum_j 2*p[j]*cos(2*pi*g*j); columns
    # carry the CIC magnitude so the target is the flat cascade, not 1/cic.
    basis = np.ones((grid_size, half + 1))
    for j in range(1, half + 1):
        basis[:, j] = 2.0 * np.cos(2.0 * math.pi * grid * j)
    design = basis * cic_mag[:, None]

    p, *_ = np.linalg.lstsq(design, np.ones(grid_size), rcond=None)

    taps = [float(p[abs(k - half)]) for k in range(tap_count)]
    return FirFilter(taps)


def composite_response(
    config: CicConfig, fir: FirFilter, grid_size: int
) -> ResponseCurve:
    """Cascade response sampled over output-rate frequencies [0, 0.5].

    Magnitude is cic(g/R) * |FIR(g)| in dB; phase is the CIC linear-phase
    term at g/R plus the symmetric FIR's group-delay term.
    """
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")
    r = config.rate
    delay = (len(fir.taps) - 1) / 2.0
    freqs, mags, phases = [], [], []
    for i in range(grid_size):
        g = 0.5 * i / (grid_size - 1)
        fir_mag = abs(fir.response_at(g))
        freqs.append(g)
        mags.append(to_db(magnitude(config, g / r) * fir_mag))
        phases.append(phase(config, g / r) - 2.0 * math.pi * g * delay)
    return ResponseCurve(freqs, mags, phases)


def passband_deviation_db(
    config: CicConfig, fir: FirFilter, fp_out: float, grid_size: int = 1001
) -> float:
    """Max |dB| of the cascade over [0, fp_out] at the output rate."""
    if not 0.0 < fp_out < 0.5:
        raise DomainError(f"fp_out {fp_out} outside (0, 0.5)")
    worst = 0.0
    for i in range(grid_size):
        g = fp_out * i / (grid_size - 1)
        level = magnitude(config, g / config.rate) * abs(fir.response_at(g))
        worst = max(worst, abs(to_db(level)))
    return worst
