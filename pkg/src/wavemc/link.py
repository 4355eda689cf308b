"""End-to-end chain orchestration and Monte Carlo BER estimation.

Transmit chain per user (coded variant in brackets):

    bits -> [convolutional encode -> block interleave] -> modulate
         -> spread with the user's Walsh-Hadamard row

then the users' chip frames are superposed, mapped one chip per subband,
synthesized with the inverse wavelet packet transform, Alamouti encoded
across two antennas, and passed through the channel.  The receiver runs
the exact inverse of every stage and counts disagreements on information
bits only (tail and pad bits are excluded).

The SNR axis is calibrated per transmitted symbol bit, so coded and
uncoded runs at the same grid point see identical noise variance and the
coded curves isolate the correction gain of the FEC (the convention the
reference results follow).

Determinism: (config, seed) fully determines every count.  Each SNR point
draws from RNG streams derived via numpy SeedSequence spawn keys, with
separate data and channel streams so that coded and uncoded runs at the
same seed see identical channel randomness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from wavemc.alamouti import alamouti_combine, alamouti_encode
from wavemc.channel import (
    ChannelBlocks,
    ChannelKind,
    NoiseCalibration,
    apply_channel,
    rayleigh_blocks,
    unit_blocks,
)
from wavemc.fec import (
    CodeConfig,
    InterleaverShape,
    conv_encode,
    deinterleave,
    interleave,
    pad_frame,
    viterbi_decode_batch,
)
from wavemc.modem import Modulation, demodulate, modulate
from wavemc.spreading import hadamard_codebook, spread, superpose, despread
from wavemc.wavelet import WaveletSpec, dwt_analyze, idwt_synthesize

DEFAULT_SEED = 12345

# Cap on information bits simulated per frame (memory, not statistics).
_MAX_FRAME_BITS = 100_000

_TABLE1_GRID = tuple(float(v) for v in range(11))


@dataclass(frozen=True)
class LinkConfig:
    """Full experiment description; defaults reproduce the Table 1 setup."""

    users: int = 4
    gain: int = 8
    scheme: Modulation = Modulation.BPSK
    coded: bool = False
    channel: ChannelKind = ChannelKind.AWGN
    wavelet_taps: int = 4
    code: CodeConfig = field(default_factory=CodeConfig)
    interleaver: InterleaverShape | None = None
    snr_grid_db: tuple[float, ...] = _TABLE1_GRID
    bits_per_user: int = 10_000
    seed: int = DEFAULT_SEED
    calibration_bypass: bool = False

    def __post_init__(self) -> None:
        if self.gain < 2 or self.gain & (self.gain - 1):
            raise ValueError(f"processing gain {self.gain} must be a power of two >= 2")
        if not 1 <= self.users <= self.gain:
            raise ValueError(f"users ({self.users}) must satisfy 1 <= K <= G ({self.gain})")
        if self.bits_per_user < 1:
            raise ValueError("bits_per_user must be positive")
        if not self.snr_grid_db:
            raise ValueError("SNR grid is empty")
        if any(b <= a for a, b in zip(self.snr_grid_db, self.snr_grid_db[1:])):
            raise ValueError("SNR grid must be strictly increasing")
        if self.calibration_bypass and self.users != 1:
            raise ValueError("calibration bypass is a single-user, single-antenna mode")
        self.wavelet_spec  # validates tap count

    @property
    def wavelet_spec(self) -> WaveletSpec:
        """Tree depth follows the processing gain: 2^levels subbands = G."""
        return WaveletSpec(taps=self.wavelet_taps, levels=int(math.log2(self.gain)))


@dataclass(frozen=True)
class BerPoint:
    """Error counts for one SNR grid point, pooled and per user."""

    snr_db: float
    bits_counted: int
    bit_errors: int
    per_user: tuple[tuple[int, int], ...]

    @property
    def ber(self) -> float:
        return self.bit_errors / self.bits_counted


@dataclass(frozen=True)
class BerCurve:
    config: LinkConfig
    points: tuple[BerPoint, ...]


def _frame_sizes(total_bits: int) -> list[int]:
    full, rem = divmod(total_bits, _MAX_FRAME_BITS)
    return [_MAX_FRAME_BITS] * full + ([rem] if rem else [])


def _encode_user(bits: np.ndarray, cfg: LinkConfig) -> tuple[np.ndarray, InterleaverShape, int]:
    coded = conv_encode(bits, cfg.code)
    shape = cfg.interleaver or InterleaverShape.for_length(coded.size)
    padded, pad = pad_frame(coded, shape)
    return interleave(padded, shape), shape, pad


def _decode_user_frames(
    rx_bits: list[np.ndarray], shape: InterleaverShape, pad: int, cfg: LinkConfig
) -> np.ndarray:
    rows = []
    for bits in rx_bits:
        deint = deinterleave(bits, shape)
        rows.append(deint[: deint.size - pad] if pad else deint)
    return viterbi_decode_batch(np.stack(rows), cfg.code)


def _bypass_frame(
    cfg: LinkConfig,
    snr_db: float,
    src: np.ndarray,
    chan_rng: np.random.Generator,
) -> np.ndarray:
    """Single antenna, no spreading/wavelet/STBC: anchors against textbook BER."""
    bits = src[0]
    shape = pad = None
    if cfg.coded:
        bits, shape, pad = _encode_user(bits, cfg)
    symbols = modulate(bits, cfg.scheme)
    calib = NoiseCalibration(
        target_ebn0_db=snr_db,
        measured_signal_power=float(np.mean(np.abs(symbols) ** 2)),
        bits_per_symbol=cfg.scheme.bits_per_symbol,
    )
    if cfg.channel is ChannelKind.RAYLEIGH:
        blocks = rayleigh_blocks(symbols.size, chan_rng)
        received = apply_channel((symbols,), cfg.channel, blocks, calib, chan_rng)
        # perfect-CSI zero forcing on the single path
        equalized = received * np.conj(blocks.h1) / np.abs(blocks.h1) ** 2
    else:
        equalized = apply_channel((symbols,), cfg.channel, None, calib, chan_rng)
    rx = demodulate(equalized, cfg.scheme, n_bits=bits.size)
    if cfg.coded:
        rx = _decode_user_frames([rx], shape, pad, cfg)[0]
    return np.array([int(np.count_nonzero(rx != src[0]))], dtype=np.int64)


def _chain_frame(
    cfg: LinkConfig,
    snr_db: float,
    src: np.ndarray,
    chan_rng: np.random.Generator,
) -> np.ndarray:
    users = cfg.users
    shape = pad = None
    tx_bits = []
    for k in range(users):
        if cfg.coded:
            bits, shape, pad = _encode_user(src[k], cfg)
        else:
            bits = src[k]
        tx_bits.append(bits)

    book = hadamard_codebook(cfg.gain, users)
    symbol_frames = [modulate(b, cfg.scheme) for b in tx_bits]
    n_symbols = symbol_frames[0].size
    composite = superpose([spread(s, book.row(k)) for k, s in enumerate(symbol_frames)])

    spec = cfg.wavelet_spec
    tx = idwt_synthesize(composite.reshape(n_symbols, cfg.gain).T, spec)

    # Received energy per user per symbol: two transmit antennas with
    # E[|h|^2] = 1 per path, G chip samples per symbol shared by K users.
    calib = NoiseCalibration(
        target_ebn0_db=snr_db,
        measured_signal_power=2.0 * float(np.mean(np.abs(tx) ** 2)) * cfg.gain / users,
        bits_per_symbol=cfg.scheme.bits_per_symbol,
    )

    ant1, ant2 = alamouti_encode(tx)
    n_blocks = tx.size // 2
    if cfg.channel is ChannelKind.RAYLEIGH:
        blocks: ChannelBlocks = rayleigh_blocks(n_blocks, chan_rng)
    else:
        blocks = unit_blocks(n_blocks)
    received = apply_channel((ant1, ant2), cfg.channel, blocks, calib, chan_rng)

    even, odd = alamouti_combine(received[0::2], received[1::2], blocks.h1, blocks.h2)
    equalized = np.empty_like(received)
    equalized[0::2] = even
    equalized[1::2] = odd

    chips_rx = dwt_analyze(equalized, spec).T.reshape(-1)

    errors = np.zeros(users, dtype=np.int64)
    if cfg.coded:
        rx_frames = []
        for k in range(users):
            decisions = despread(chips_rx, book.row(k))
            rx_frames.append(demodulate(decisions, cfg.scheme, n_bits=tx_bits[k].size))
        decoded = _decode_user_frames(rx_frames, shape, pad, cfg)
        errors[:] = np.count_nonzero(decoded != src, axis=1)
    else:
        for k in range(users):
            decisions = despread(chips_rx, book.row(k))
            rx = demodulate(decisions, cfg.scheme, n_bits=tx_bits[k].size)
            errors[k] = int(np.count_nonzero(rx != src[k]))
    return errors


def run_point(cfg: LinkConfig, snr_db: float, seed) -> BerPoint:
    """Simulate one SNR grid point; deterministic given (cfg, snr_db, seed).

    ``seed`` may be an int or a tuple of ints (SeedSequence entropy).
    """
    users = cfg.users
    errors = np.zeros(users, dtype=np.int64)
    for frame_idx, frame_bits in enumerate(_frame_sizes(cfg.bits_per_user)):
        data_rng = np.random.default_rng(
            np.random.SeedSequence(entropy=seed, spawn_key=(frame_idx, 0))
        )
        chan_rng = np.random.default_rng(
            np.random.SeedSequence(entropy=seed, spawn_key=(frame_idx, 1))
        )
        src = data_rng.integers(0, 2, size=(users, frame_bits), dtype=np.int8)
        if cfg.calibration_bypass:
            errors += _bypass_frame(cfg, snr_db, src, chan_rng)
        else:
            errors += _chain_frame(cfg, snr_db, src, chan_rng)
    per_user = tuple((int(e), cfg.bits_per_user) for e in errors)
    return BerPoint(
        snr_db=float(snr_db),
        bits_counted=users * cfg.bits_per_user,
        bit_errors=int(errors.sum()),
        per_user=per_user,
    )


def sweep(cfg: LinkConfig) -> BerCurve:
    """Run every grid point with per-point derived seeds; points independent."""
    points = tuple(
        run_point(cfg, snr_db, seed=(cfg.seed, idx))
        for idx, snr_db in enumerate(cfg.snr_grid_db)
    )
    return BerCurve(config=cfg, points=points)


def table1_configs(
    bits_per_user: int = 10_000, seed: int = DEFAULT_SEED
) -> list[LinkConfig]:
    """The full 4 schemes x {uncoded, coded} x {AWGN, Rayleigh} grid."""
    base = LinkConfig(bits_per_user=bits_per_user, seed=seed)
    return [
        replace(base, scheme=scheme, coded=coded, channel=channel)
        for channel in (ChannelKind.AWGN, ChannelKind.RAYLEIGH)
        for scheme in (Modulation.BPSK, Modulation.QPSK, Modulation.QAM4, Modulation.DBPSK)
        for coded in (False, True)
    ]
