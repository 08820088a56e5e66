"""Droop-compensation FIR design tests.

The design target for (N=2, R=50) over [0, 0.25] at the output rate is the
benchmark case throughout: its uncompensated droop is 1.82 dB.
"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cicdec import (
    CicConfig,
    ConfigError,
    DomainError,
    FirFilter,
    composite_response,
    design_compensator,
    magnitude,
    passband_deviation_db,
    phase,
    to_db,
)
from helpers import quiet_config

BENCH = CicConfig(2, 50)


def test_fifteen_taps_flatten_the_benchmark_passband():
    fir = design_compensator(BENCH, 15, 0.25)
    assert len(fir) == 15
    dev = passband_deviation_db(BENCH, fir, 0.25)
    assert dev <= 5e-6  # least-squares optimum is ~1e-6 here
    assert abs(fir.dc_gain() - 1.0) <= 1e-6


def test_taps_are_exactly_symmetric():
    fir = design_compensator(BENCH, 15, 0.25)
    assert fir.taps == fir.taps[::-1]


def test_deviation_improves_with_tap_count():
    devs = [
        passband_deviation_db(BENCH, design_compensator(BENCH, t, 0.25), 0.25)
        for t in (5, 7, 9, 11, 13, 15)
    ]
    assert all(b <= a for a, b in zip(devs, devs[1:]))
    assert all(d < 1.82 for d in devs)  # every design beats the raw droop


def test_single_tap_is_the_scalar_least_squares_fit():
    fir = design_compensator(BENCH, 1, 0.25)
    grid = np.linspace(0.0, 0.25, 201)
    c = np.array([magnitude(BENCH, g / BENCH.rate) for g in grid])
    assert fir.taps[0] == pytest.approx(c.sum() / (c @ c), rel=1e-12)


def test_single_tap_tends_to_unity_for_tiny_passbands():
    fir = design_compensator(BENCH, 1, 1e-6)
    assert abs(fir.taps[0] - 1.0) < 1e-9


def test_flat_filter_needs_no_compensation():
    # D=1 has no droop; the fit must return a delta within solver tolerance
    flat = CicConfig(3, 1)
    for taps in (1, 3, 7, 15):
        fir = design_compensator(flat, taps, 0.25)
        mid = taps // 2
        ideal = [0.0] * mid + [1.0] + [0.0] * mid
        assert max(abs(a - b) for a, b in zip(fir.taps, ideal)) <= 1e-9


def test_design_grid_refinement_is_stable():
    d201 = passband_deviation_db(BENCH, design_compensator(BENCH, 15, 0.25, grid_size=201), 0.25)
    d402 = passband_deviation_db(BENCH, design_compensator(BENCH, 15, 0.25, grid_size=402), 0.25)
    assert abs(d201 - d402) < 0.01


@pytest.mark.parametrize("bad_taps", [0, -1, 2, 4, 16])
def test_even_or_nonpositive_tap_counts_rejected(bad_taps):
    with pytest.raises(ConfigError):
        design_compensator(BENCH, bad_taps, 0.25)


@pytest.mark.parametrize("bad_fp", [0.0, 0.5, 0.75, -0.1])
def test_bad_output_edges_rejected(bad_fp):
    with pytest.raises(DomainError):
        design_compensator(BENCH, 15, bad_fp)
    with pytest.raises(DomainError):
        passband_deviation_db(BENCH, FirFilter([1.0]), bad_fp)


def test_tiny_design_grid_rejected():
    with pytest.raises(DomainError):
        design_compensator(BENCH, 15, 0.25, grid_size=1)
    with pytest.raises(DomainError):
        composite_response(BENCH, FirFilter([1.0]), 1)


@given(
    st.integers(1, 3),
    st.integers(1, 16),
    st.integers(0, 9),
    st.floats(0.05, 0.45),
)
def test_designs_are_symmetric_and_normalized(n, r, half, fp_out):
    cfg = quiet_config(n, r)
    fir = design_compensator(cfg, 2 * half + 1, fp_out, grid_size=64)
    assert len(fir) == 2 * half + 1
    assert fir.taps == fir.taps[::-1]
    assert np.isfinite(fir.taps).all()


# ---------------------------------------------------------------- composite


def test_identity_fir_reproduces_raw_response():
    fir = FirFilter([1.0])
    curve = composite_response(BENCH, fir, 101)
    for g, mag_db, ph in curve.rows():
        assert mag_db == to_db(magnitude(BENCH, g / BENCH.rate))


def test_composite_is_flat_at_dc_and_within_spec_across_passband():
    fir = design_compensator(BENCH, 15, 0.25)
    curve = composite_response(BENCH, fir, 401)
    assert abs(curve.mag_db[0]) <= 1e-5
    for g, mag_db, ph in curve.rows():
        if g <= 0.25:
            assert abs(mag_db) <= 0.1


def test_composite_phase_adds_fir_group_delay():
    fir = design_compensator(BENCH, 15, 0.25)
    curve = composite_response(BENCH, fir, 101)
    g = curve.freqs[40]
    expected = phase(BENCH, g / BENCH.rate) - 2 * np.pi * g * (len(fir) - 1) / 2
    assert curve.phase_rad[40] == pytest.approx(expected, rel=1e-12)
