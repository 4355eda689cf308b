"""Bit-to-symbol mapping and hard-decision demapping.

All constellations have unit average symbol energy.  QPSK uses natural
(binary-ordered) phase labels {1, j, -1, -j} while 4QAM is Gray labelled,
so the two schemes trace different BER curves even though the point sets
coincide up to rotation.  DBPSK is differentially encoded with one
reference symbol prepended and detected non-coherently from the phase of
s[k] * conj(s[k-1]).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

_SQRT2 = np.sqrt(2.0)

_QPSK_POINTS = np.array([1.0 + 0.0j, 0.0 + 1.0j, -1.0 + 0.0j, 0.0 - 1.0j])
# Gray 4QAM: index (b0<<1)|b1 -> ((1-2*b1) + j*(1-2*b0)) / sqrt(2)
_QAM4_POINTS = np.array([1.0 + 1.0j, -1.0 + 1.0j, 1.0 - 1.0j, -1.0 - 1.0j]) / _SQRT2


class Modulation(str, Enum):
    BPSK = "bpsk"
    QPSK = "qpsk"
    QAM4 = "4qam"
    DBPSK = "dbpsk"

    @property
    def bits_per_symbol(self) -> int:
        return 2 if self in (Modulation.QPSK, Modulation.QAM4) else 1

    @property
    def constellation(self) -> np.ndarray:
        """Decision point set (index = integer bit label); BPSK/DBPSK use +-1."""
        if self is Modulation.QPSK:
            return _QPSK_POINTS
        if self is Modulation.QAM4:
            return _QAM4_POINTS
        return np.array([1.0 + 0.0j, -1.0 + 0.0j])


def _bit_pairs_to_index(bits: np.ndarray) -> np.ndarray:
    return (bits[0::2].astype(np.int64) << 1) | bits[1::2]


def modulate(bits: np.ndarray | list[int], scheme: Modulation) -> np.ndarray:
    """Map a bit frame to unit-average-energy complex symbols.

    Odd-length frames for the 2-bit schemes are zero-padded by one bit;
    pass the original bit count to :func:`demodulate` to strip it.  DBPSK
    output carries a leading +1 reference symbol, so it is one symbol
    longer than the bit count.
    """
    b = np.asarray(bits).astype(np.int8)
    if scheme is Modulation.BPSK:
        return (1.0 - 2.0 * b).astype(complex)
    if scheme is Modulation.DBPSK:
        # phi[k] = phi[k-1] + pi*bit[k], phi[-1] = 0
        steps = np.concatenate([[1.0], 1.0 - 2.0 * b.astype(float)])
        return np.cumprod(steps).astype(complex)
    if b.size % 2 != 0:
        b = np.concatenate([b, np.zeros(1, dtype=b.dtype)])
    return scheme.constellation[_bit_pairs_to_index(b)]


def demodulate(
    symbols: np.ndarray, scheme: Modulation, n_bits: int | None = None
) -> np.ndarray:
    """Minimum-distance hard decisions back to bits.

    ``n_bits`` truncates the output to the pre-padding frame length.  For
    DBPSK the input must retain the reference symbol.
    """
    s = np.asarray(symbols, dtype=complex)
    if s.size == 0:
        raise ValueError("empty frame")
    if scheme is Modulation.BPSK:
        bits = (s.real < 0).astype(np.int8)
    elif scheme is Modulation.DBPSK:
        diff = s[1:] * np.conj(s[:-1])
        bits = (diff.real < 0).astype(np.int8)
    else:
        points = scheme.constellation
        idx = np.argmin(np.abs(s[:, None] - points[None, :]), axis=1)
        bits = np.empty(2 * s.size, dtype=np.int8)
        bits[0::2] = (idx >> 1) & 1
        bits[1::2] = idx & 1
    if n_bits is not None:
        bits = bits[:n_bits]
    return bits
