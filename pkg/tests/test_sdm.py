"""First-order sigma-delta stimulus source tests."""

import pytest
from hypothesis import given, strategies as st

from cicdec import OUTPUT_BITS, CicConfig, DecimatorState, SigmaDeltaModulator, gain


def test_output_bits_constant():
    assert OUTPUT_BITS == 2  # +-1 needs two signed bits


def test_bits_are_always_plus_or_minus_one():
    bits = SigmaDeltaModulator().stream(0.37, 500)
    assert set(bits) <= {-1, 1}


def test_zero_input_alternates_to_zero_mean():
    bits = SigmaDeltaModulator().stream(0.0, 1000)
    assert sum(bits) == 0
    assert bits[:4] == [-1, 1, -1, 1]


def test_full_scale_inputs_saturate():
    assert SigmaDeltaModulator().stream(1.0, 50) == [1] * 50
    assert SigmaDeltaModulator().stream(-1.0, 50) == [-1] * 50


def test_mean_tracks_dc_level():
    for level in (0.5, -0.25, 0.8):
        bits = SigmaDeltaModulator().stream(level, 20000)
        assert sum(bits) / len(bits) == pytest.approx(level, abs=0.005)


def test_out_of_range_level_rejected():
    sdm = SigmaDeltaModulator()
    with pytest.raises(ValueError):
        sdm.step(1.5)
    with pytest.raises(ValueError):
        sdm.step(-1.0001)


@given(st.lists(st.floats(-1.0, 1.0, allow_nan=False), max_size=300))
def test_accumulator_stays_bounded(levels):
    # first-order loop: |acc| can never exceed 1 + max|input|
    sdm = SigmaDeltaModulator()
    bound = 1.0 + max(map(abs, levels), default=0.0)
    for u in levels:
        sdm.step(u)
        assert abs(sdm.accumulator) <= bound + 1e-12


def test_modulator_feeds_decimator_end_to_end():
    # dc=0.5 through (N=2, R=50): steady outputs average gain/2 = 1250
    cfg = CicConfig(2, 50, 1, OUTPUT_BITS)
    bits = SigmaDeltaModulator().stream(0.5, 10000)
    outs = DecimatorState(cfg).process_block(bits)
    steady = outs[2:]  # first outputs see partially filled registers
    mean = sum(steady) / len(steady)
    assert mean == pytest.approx(gain(cfg) / 2, rel=0.01)
