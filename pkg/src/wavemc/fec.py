"""Convolutional (trellis) coding, hard-decision Viterbi decoding, block interleaving.

The encoder is a feed-forward shift register with octal generator taps and
zero-tail termination: the register starts in the all-zero state and K-1
trailing zeros flush it back, so a frame of N data bits yields 2*(N + K - 1)
code bits at rate 1/2.  The decoder is a full-block Viterbi search for the
minimum-Hamming-distance path starting and ending in state zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CodeConfig:
    """Rate-1/2 convolutional code parameters.

    ``generators`` are octal-valued tap masks; bit i of a mask taps the
    input delayed by i, so the default (7, 5) with constraint length 3
    produces out1 = u ^ s1 ^ s2 and out2 = u ^ s2.
    """

    constraint_length: int = 3
    generators: tuple[int, int] = (0o7, 0o5)
    traceback_depth: int = 15

    def __post_init__(self) -> None:
        k = self.constraint_length
        if k < 2:
            raise ValueError("constraint length must be at least 2")
        if len(self.generators) != 2:
            raise ValueError("rate 1/2 code requires exactly two generators")
        for g in self.generators:
            if not 0 < g < (1 << k):
                raise ValueError(f"generator {g:o} does not fit in {k} register bits")
        if self.traceback_depth < 5 * k:
            raise ValueError("traceback depth must be at least 5x constraint length")

    @property
    def rate_numerator(self) -> int:
        return 1

    @property
    def rate_denominator(self) -> int:
        return len(self.generators)

    @property
    def n_states(self) -> int:
        return 1 << (self.constraint_length - 1)

    @classmethod
    def from_text(cls, text: str, constraint_length: int | None = None) -> "CodeConfig":
        """Build from octal generator text such as ``"7,5"`` or ``"171,133"``."""
        try:
            gens = tuple(int(tok.strip(), 8) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"invalid octal generator list {text!r}") from exc
        if len(gens) != 2:
            raise ValueError("expected exactly two comma-separated octal generators")
        if constraint_length is None:
            constraint_length = max(g.bit_length() for g in gens)
        return cls(
            constraint_length=constraint_length,
            generators=gens,  # type: ignore[arg-type]
            traceback_depth=5 * constraint_length,
        )


@dataclass(frozen=True)
class InterleaverShape:
    """Block interleaver geometry: write row by row, read column by column."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("interleaver dimensions must be positive")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    @classmethod
    def for_length(cls, n: int, rows: int = 10) -> "InterleaverShape":
        """Default shape: fixed row count, columns sized to fit the frame."""
        if n < 1:
            raise ValueError("empty frame")
        return cls(rows=rows, cols=math.ceil(n / rows))

    @classmethod
    def from_text(cls, text: str) -> "InterleaverShape":
        """Parse ``"RxC"`` notation, e.g. ``"10x2001"``."""
        try:
            r, c = text.lower().split("x")
            return cls(rows=int(r), cols=int(c))
        except ValueError as exc:
            raise ValueError(f"invalid interleaver shape {text!r}, expected RxC") from exc


def _as_bits(frame: np.ndarray | list[int]) -> np.ndarray:
    bits = np.asarray(frame)
    if bits.ndim != 1:
        raise ValueError("bit frame must be one-dimensional")
    return bits.astype(np.int8)


def _generator_taps(g: int, k: int) -> np.ndarray:
    return np.array([(g >> i) & 1 for i in range(k)], dtype=np.int8)


def conv_encode(data: np.ndarray | list[int], cfg: CodeConfig = CodeConfig()) -> np.ndarray:
    """Encode a bit frame, appending K-1 tail bits that flush the register.

    Output length is 2 * (len(data) + K - 1); output bits from the two
    generators are interleaved per input bit.
    """
    bits = _as_bits(data)
    if bits.size == 0:
        raise ValueError("empty frame")
    k = cfg.constraint_length
    n_out = bits.size + k - 1
    out = np.empty(2 * n_out, dtype=np.int8)
    for j, g in enumerate(cfg.generators):
        taps = _generator_taps(g, k)
        # GF(2) convolution; the natural tail of the convolution equals
        # the zero-tail register flush.
        out[j::2] = np.convolve(bits, taps)[:n_out] % 2
    return out


def _trellis(cfg: CodeConfig) -> tuple[np.ndarray, np.ndarray]:
    """Predecessor table and per-step branch costs.

    Returns (pred, cost) with pred[ns] = the two predecessor states of ns
    in ascending order, and cost[r, ns, j] = Hamming distance between the
    branch output pred[ns, j] -> ns and the received pair value r.
    """
    k = cfg.constraint_length
    n_states = cfg.n_states
    popcount = np.array([0, 1, 1, 2])
    pred = np.empty((n_states, 2), dtype=np.int64)
    cost = np.empty((4, n_states, 2), dtype=np.int64)
    for ns in range(n_states):
        u = ns & 1
        pred[ns] = (ns >> 1, (ns >> 1) | (n_states >> 1))
        for j in (0, 1):
            reg = ((pred[ns, j] << 1) | u) & ((1 << k) - 1)
            o1 = bin(reg & cfg.generators[0]).count("1") & 1
            o2 = bin(reg & cfg.generators[1]).count("1") & 1
            pair = (o1 << 1) | o2
            cost[:, ns, j] = popcount[pair ^ np.arange(4)]
    return pred, cost


def viterbi_decode_batch(coded: np.ndarray, cfg: CodeConfig = CodeConfig()) -> np.ndarray:
    """Decode a (batch, 2n) array of hard-decision codewords in lockstep.

    All rows must come from the same code with zero-tail termination.  On
    equal path metrics the predecessor with the lower state index wins.
    """
    rx = np.asarray(coded)
    if rx.ndim != 2:
        raise ValueError("expected a 2-D batch of codewords")
    if rx.shape[1] == 0 or rx.shape[1] % 2 != 0:
        raise ValueError("misaligned codeword")
    k = cfg.constraint_length
    n_steps = rx.shape[1] // 2
    if n_steps < k - 1:
        raise ValueError("codeword shorter than the termination tail")
    batch = rx.shape[0]
    pred, cost = _trellis(cfg)
    pairs = (rx[:, 0::2].astype(np.int64) << 1) | rx[:, 1::2].astype(np.int64)

    big = 1 << 40
    metric = np.full((batch, cfg.n_states), big, dtype=np.int64)
    metric[:, 0] = 0
    back = np.empty((n_steps, batch, cfg.n_states), dtype=np.int8)
    for t in range(n_steps):
        cand = metric[:, pred] + cost[pairs[:, t]]
        j = np.argmin(cand, axis=2)  # first minimum = lower predecessor index
        back[t] = j
        metric = np.take_along_axis(cand, j[:, :, None], axis=2)[:, :, 0]

    state = np.zeros(batch, dtype=np.int64)  # zero-terminated trellis
    rows = np.arange(batch)
    decoded = np.empty((batch, n_steps), dtype=np.int8)
    for t in range(n_steps - 1, -1, -1):
        decoded[:, t] = state & 1
        state = pred[state, back[t, rows, state]]
    return decoded[:, : n_steps - (k - 1)]


def viterbi_decode(coded: np.ndarray | list[int], cfg: CodeConfig = CodeConfig()) -> np.ndarray:
    """Maximum-likelihood (minimum Hamming distance) decode of one frame.

    Inverse of :func:`conv_encode`; the K-1 tail bits are stripped.
    """
    bits = _as_bits(coded)
    if bits.size == 0:
        raise ValueError("empty frame")
    if bits.size % 2 != 0:
        raise ValueError("misaligned codeword")
    return viterbi_decode_batch(bits[None, :], cfg)[0]


def pad_frame(frame: np.ndarray | list[int], shape: InterleaverShape) -> tuple[np.ndarray, int]:
    """Zero-pad a frame to fill the interleaver; returns (padded, pad_length)."""
    bits = _as_bits(frame)
    pad = shape.size - bits.size
    if pad < 0:
        raise ValueError(f"frame of {bits.size} bits does not fit {shape.rows}x{shape.cols}")
    if pad == 0:
        return bits, 0
    return np.concatenate([bits, np.zeros(pad, dtype=bits.dtype)]), pad


def interleave(frame: np.ndarray | list[int], shape: InterleaverShape) -> np.ndarray:
    """Row-write/column-read permutation of a frame of exactly rows*cols items."""
    arr = np.asarray(frame)
    if arr.size != shape.size:
        raise ValueError(f"frame length {arr.size} does not match {shape.rows}x{shape.cols}")
    return arr.reshape(shape.rows, shape.cols).T.ravel()


def deinterleave(frame: np.ndarray | list[int], shape: InterleaverShape) -> np.ndarray:
    """Exact inverse of :func:`interleave`."""
    arr = np.asarray(frame)
    if arr.size != shape.size:
        raise ValueError(f"frame length {arr.size} does not match {shape.rows}x{shape.cols}")
    return arr.reshape(shape.cols, shape.rows).T.ravel()
