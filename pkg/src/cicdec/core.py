"""Bit-exact streaming CIC decimator and its unbounded-integer reference.

The streaming engine uses the Hogenauer arrangement: N integrators running
at the input rate, a 1-of-R downsampler, then N combs with differential
delay M running at the output rate.  All internal registers are W-bit
two's-complement and wrap on overflow; W is sized so the final output
always fits, which makes the wrapping lossless (the engine agrees exactly
with `reference_decimate`, which uses Python's unbounded integers).
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field


class ConfigError(ValueError):
    """A filter parameter is out of its allowed range."""


class WidthError(ValueError):
    """A register width override is too small for the configuration."""


class InputRangeError(ValueError):
    """An input sample does not fit the configured signed input width."""


class DifferentialDelayWarning(UserWarning):
    """Differential delay outside the usual {1, 2} design range."""


@dataclass(frozen=True)
class CicConfig:
    """CIC design tuple: stage count, rate change, differential delay, input bits.

    Construction validates the fields; a differential delay above 2 is
    accepted but warned about, since such designs are unusual (the nulls
    bunch up inside the would-be passband).
    """

    stages: int
    rate: int
    diff_delay: int = 1
    input_bits: int = 16

    def __post_init__(self):
        for name in ("stages", "rate", "diff_delay", "input_bits"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.diff_delay > 2:
            warnings.warn(
                f"diff_delay={self.diff_delay} is outside the usual design range "
                "{1, 2}; the response nulls move into the passband",
                DifferentialDelayWarning,
                stacklevel=2,
            )

    @property
    def kernel_length(self) -> int:
        """Length R*M of the single-stage boxcar kernel (the composite rate change)."""
        return self.rate * self.diff_delay


def validate(config: CicConfig) -> CicConfig:
    """Re-run the construction checks on `config` and return it unchanged."""
    CicConfig(config.stages, config.rate, config.diff_delay, config.input_bits)
    return config


def gain(config: CicConfig) -> int:
    """DC gain (R*M)**N, exact."""
    return config.kernel_length ** config.stages


def required_width(config: CicConfig) -> int:
    """Register/output width W = B + ceil(log2(gain)), in bits.

    Any W-bit two's-complement register chain is then lossless for every
    B-bit signed input sequence: the worst-case output magnitude is
    gain * 2**(B-1), which is exactly the negative end of the W-bit range.
    """
    g = gain(config)
    return config.input_bits + (g - 1).bit_length()


def _wrap(value: int, width: int) -> int:
    """Reduce `value` into the signed two's-complement range of `width` bits."""
    value &= (1 << width) - 1
    if value >= 1 << (width - 1):
        value -= 1 << width
    return value


@dataclass(frozen=True)
class RegisterWord:
    """A W-bit signed register value with modular (wrapping) arithmetic.

    The stored value always lies in [-2**(W-1), 2**(W-1) - 1]; construction
    reduces any integer into that range, and add/sub never overflow.
    """

    width: int
    value: int = 0

    def __post_init__(self):
        if self.width < 1:
            raise ConfigError(f"width must be >= 1, got {self.width}")
        object.__setattr__(self, "value", _wrap(self.value, self.width))

    def add(self, other: "RegisterWord | int") -> "RegisterWord":
        rhs = other.value if isinstance(other, RegisterWord) else other
        return RegisterWord(self.width, self.value + rhs)

    def sub(self, other: "RegisterWord | int") -> "RegisterWord":
        rhs = other.value if isinstance(other, RegisterWord) else other
        return RegisterWord(self.width, self.value - rhs)


class DecimatorState:
    """Live state of a streaming Hogenauer decimator.

    One instance owns its accumulators and comb delay lines; feed it from a
    single thread.  `push` consumes one input sample and returns an output
    sample on every R-th call, None otherwise.
    """

    def __init__(self, config: CicConfig, width: int | None = None):
        validate(config)
        min_width = required_width(config)
        if width is None:
            width = min_width
        elif width < min_width:
            raise WidthError(
                f"width {width} is below the {min_width} bits required for "
                f"N={config.stages} R={config.rate} M={config.diff_delay} "
                f"B={config.input_bits}"
            )
        self.config = config
        self.width = width
        self._in_min = -(1 << (config.input_bits - 1))
        self._in_max = (1 << (config.input_bits - 1)) - 1
        self.reset()

    def reset(self) -> None:
        """Zero accumulators, delay lines, phase and sample counters."""
        n, m = self.config.stages, self.config.diff_delay
        self._integrators = [0] * n
        self._combs = [deque([0] * m, maxlen=m) for _ in range(n)]
        self.phase = 0
        self.samples_in = 0
        self.samples_out = 0

    def push(self, x: int) -> int | None:
        """Consume one input sample; return an output on every R-th push."""
        if not self._in_min <= x <= self._in_max:
            raise InputRangeError(
                f"sample {x} outside signed {self.config.input_bits}-bit range "
                f"[{self._in_min}, {self._in_max}]"
            )
        width = self.width
        acc = self._integrators
        v = x
        for i in range(len(acc)):
            v = _wrap(acc[i] + v, width)
            acc[i] = v

        self.samples_in += 1
        self.phase += 1
        if self.phase < self.config.rate:
            return None
        self.phase = 0

        for line in self._combs:
            oldest = line[-1]
            line.appendleft(v)
            v = _wrap(v - oldest, width)
        self.samples_out += 1
        return v

    def process_block(self, samples) -> list[int]:
        """Push every sample of `samples`; return the outputs emitted."""
        out = []
        for x in samples:
            y = self.push(x)
            if y is not None:
                out.append(y)
        return out


def boxcar_power(length: int, order: int) -> list[int]:
    """`order`-fold self-convolution of a length-`length` all-ones kernel.

    These are the exact integer taps of the full-rate CIC impulse response:
    order*(length-1)+1 of them, palindromic, summing to length**order.
    """
    taps = [1]
    for _ in range(order):
        acc = [0] * (len(taps) + length - 1)
        for i, t in enumerate(taps):
            for j in range(length):
                acc[i + j] += t
        taps = acc
    return taps


def reference_decimate(config: CicConfig, samples) -> list[int]:
    """Brute-force oracle: full-rate convolution in unbounded integers.

    Convolves the input with the exact CIC kernel and keeps the full-rate
    outputs at indices m*R + R - 1, i.e. one output after every R inputs.
    No wrapping anywhere; results are exact Python integers.
    """
    validate(config)
    samples = list(samples)
    taps = boxcar_power(config.kernel_length, config.stages)
    r = config.rate
    out = []
    for i in range(r - 1, len(samples), r):
        acc = 0
        for k, t in enumerate(taps):
            j = i - k
            if j < 0:
                break
            acc += t * samples[j]
        out.append(acc)
    return out
