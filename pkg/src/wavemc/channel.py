"""Channel models: AWGN injection, flat Rayleigh block fading, SNR bookkeeping.

The SNR axis is Eb/N0 per information bit.  Noise variance follows

    sigma^2 = measured_signal_power / (ebn0_linear * bits_per_symbol * code_rate)

where measured_signal_power is the received energy per user per symbol
(per-sample waveform power times G/K times the number of transmit
antennas reaching the receiver), so coded and uncoded runs at the same
Eb/N0 are compared fairly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np


class ChannelKind(str, Enum):
    AWGN = "awgn"
    RAYLEIGH = "rayleigh"


@dataclass(frozen=True)
class ChannelBlocks:
    """Quasi-static path gains, one (h1, h2) pair per Alamouti two-slot block."""

    h1: np.ndarray
    h2: np.ndarray

    def __post_init__(self) -> None:
        if self.h1.shape != self.h2.shape:
            raise ValueError("path gain arrays must have equal shape")

    def __len__(self) -> int:
        return self.h1.size


@dataclass(frozen=True)
class NoiseCalibration:
    """Maps a target Eb/N0 to the complex noise variance."""

    target_ebn0_db: float
    measured_signal_power: float
    bits_per_symbol: int = 1
    code_rate: float = 1.0

    def __post_init__(self) -> None:
        if self.measured_signal_power <= 0:
            raise ValueError("signal power must be positive")
        if self.bits_per_symbol < 1 or not 0 < self.code_rate <= 1:
            raise ValueError("invalid bits/symbol or code rate")

    @property
    def ebn0_linear(self) -> float:
        return 10.0 ** (self.target_ebn0_db / 10.0)

    @property
    def noise_variance(self) -> float:
        if math.isinf(self.target_ebn0_db):
            return 0.0
        return self.measured_signal_power / (
            self.ebn0_linear * self.bits_per_symbol * self.code_rate
        )


def awgn(
    signal: np.ndarray, calib: NoiseCalibration | float, rng: np.random.Generator
) -> np.ndarray:
    """Add circularly symmetric complex Gaussian noise of total variance sigma^2.

    ``calib`` may be a NoiseCalibration or the variance itself.  Zero
    variance returns the input unchanged without consuming RNG draws.
    """
    sigma2 = calib.noise_variance if isinstance(calib, NoiseCalibration) else float(calib)
    if sigma2 < 0:
        raise ValueError("noise variance must be non-negative")
    x = np.asarray(signal, dtype=complex)
    if sigma2 == 0.0:
        return x.copy()
    scale = np.sqrt(sigma2 / 2.0)
    noise = scale * (rng.standard_normal(x.shape) + 1j * rng.standard_normal(x.shape))
    return x + noise


def rayleigh_blocks(count: int, rng: np.random.Generator) -> ChannelBlocks:
    """i.i.d. CN(0, 1) path gain pairs, E[|h|^2] = 1, independent across blocks."""
    if count < 1:
        raise ValueError("block count must be positive")
    draw = rng.standard_normal((4, count))
    h1 = (draw[0] + 1j * draw[1]) / np.sqrt(2.0)
    h2 = (draw[2] + 1j * draw[3]) / np.sqrt(2.0)
    return ChannelBlocks(h1=h1, h2=h2)


def unit_blocks(count: int) -> ChannelBlocks:
    """h1 = h2 = 1: the non-fading degeneration used for the AWGN channel."""
    ones = np.ones(count, dtype=complex)
    return ChannelBlocks(h1=ones, h2=ones)


def apply_channel(
    antenna_streams: tuple[np.ndarray, ...] | list[np.ndarray],
    kind: ChannelKind,
    blocks: ChannelBlocks | None,
    calib: NoiseCalibration | float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Propagate antenna streams to the single receive antenna and add noise.

    Two streams: samples are taken in Alamouti slot pairs, block i scaling
    samples 2i and 2i+1 of both streams (y = h1 x1 + h2 x2 per slot).  One
    stream: a single-path link with one h1 gain per sample.  The AWGN kind
    fixes all gains to 1 (blocks may be None).
    """
    streams = [np.asarray(s, dtype=complex) for s in antenna_streams]
    if not 1 <= len(streams) <= 2:
        raise ValueError("expected one or two antenna streams")
    n = streams[0].size
    if any(s.size != n for s in streams):
        raise ValueError("antenna streams must have equal length")

    if len(streams) == 1:
        if kind is ChannelKind.AWGN:
            faded = streams[0]
        else:
            if blocks is None or len(blocks) != n:
                raise ValueError(f"need one fading block per sample ({n})")
            faded = blocks.h1 * streams[0]
        return awgn(faded, calib, rng)

    if n % 2:
        raise ValueError("two-antenna transmission requires an even sample count")
    if kind is ChannelKind.AWGN:
        blocks = unit_blocks(n // 2)
    elif blocks is None or len(blocks) != n // 2:
        raise ValueError(f"need one fading block per sample pair ({n // 2})")
    g1 = np.repeat(blocks.h1, 2)
    g2 = np.repeat(blocks.h2, 2)
    return awgn(g1 * streams[0] + g2 * streams[1], calib, rng)


def measure_snr(original: np.ndarray, reconstructed: np.ndarray) -> float:
    """Reconstruction SNR in dB: 10 log10(mean|x|^2 / mean|x - x_hat|^2).

    Returns +inf when the reconstruction is exact.
    """
    x = np.asarray(original, dtype=complex)
    y = np.asarray(reconstructed, dtype=complex)
    if x.shape != y.shape:
        raise ValueError("frames must have equal shape")
    p_signal = float(np.mean(np.abs(x) ** 2))
    p_error = float(np.mean(np.abs(x - y) ** 2))
    if p_error == 0.0:
        return math.inf
    return 10.0 * math.log10(p_signal / p_error)
