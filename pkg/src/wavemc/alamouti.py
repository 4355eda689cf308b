"""2x1 Alamouti space-time block code: encoder, combiner, closed-form BER.

Each symbol pair (x1, x2) spans two slots: antenna 1 sends x1 then -x2*,
antenna 2 sends x2 then x1*.  With path gains (h1, h2) held constant over
the pair, the single receive antenna sees

    y1 = h1*x1 + h2*x2 + n1
    y2 = -h1*x2* + h2*x1* + n2

and stacking [y1; y2*] gives H = [[h1, h2], [h2*, -h1*]] with
H^H H = (|h1|^2 + |h2|^2) I, so the pseudo-inverse combiner decouples the
pair with no cross-talk:

    x1_hat = (h1* y1 + h2 y2*) / (|h1|^2 + |h2|^2)
    x2_hat = (h2* y1 - h1 y2*) / (|h1|^2 + |h2|^2)
"""

from __future__ import annotations

import numpy as np


def alamouti_encode(symbols: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split a symbol stream into the two antenna streams.

    Odd-length inputs are padded by repeating the last symbol (strip the
    final combined sample at the receiver).  Both output streams have the
    (padded) input length.
    """
    x = np.asarray(symbols, dtype=complex)
    if x.size == 0:
        raise ValueError("empty frame")
    if x.size % 2:
        x = np.concatenate([x, x[-1:]])
    x1 = x[0::2]
    x2 = x[1::2]
    ant1 = np.empty_like(x)
    ant2 = np.empty_like(x)
    ant1[0::2] = x1
    ant1[1::2] = -np.conj(x2)
    ant2[0::2] = x2
    ant2[1::2] = np.conj(x1)
    return ant1, ant2


def alamouti_combine(
    y1: np.ndarray | complex,
    y2: np.ndarray | complex,
    h1: np.ndarray | complex,
    h2: np.ndarray | complex,
) -> tuple[np.ndarray, np.ndarray]:
    """Pseudo-inverse combining of one received pair per block (vectorized)."""
    y1 = np.asarray(y1, dtype=complex)
    y2 = np.asarray(y2, dtype=complex)
    h1 = np.asarray(h1, dtype=complex)
    h2 = np.asarray(h2, dtype=complex)
    den = np.abs(h1) ** 2 + np.abs(h2) ** 2
    if np.any(den == 0):
        raise ValueError("channel singular")
    x1 = (np.conj(h1) * y1 + h2 * np.conj(y2)) / den
    x2 = (np.conj(h2) * y1 - h1 * np.conj(y2)) / den
    return x1, x2


def stbc_theoretical_ber(ebn0_linear: float | np.ndarray) -> float | np.ndarray:
    """Closed-form BER of 2x1 Alamouti BPSK over i.i.d. Rayleigh fading.

    p = 1/2 - 1/2 (1 + 2/ebn0)^(-1/2);  P_e = p^2 [1 + 2(1 - p)].
    The 2/ebn0 term reflects the transmit power split across the two
    antennas (two-branch MRC at half the per-branch SNR).
    """
    rho = np.asarray(ebn0_linear, dtype=float)
    if np.any(rho <= 0):
        raise ValueError("Eb/N0 must be positive")
    p = 0.5 - 0.5 / np.sqrt(1.0 + 2.0 / rho)
    pe = p * p * (1.0 + 2.0 * (1.0 - p))
    return float(pe) if np.isscalar(ebn0_linear) else pe
