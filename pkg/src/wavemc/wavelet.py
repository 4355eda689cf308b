"""Daubechies orthonormal filter bank used as the multicarrier modulator.

The synthesis direction (inverse transform) turns G parallel subband
sequences into one time-domain stream; the analysis direction inverts it
exactly.  A full wavelet-packet tree of depth log2(G) is used rather than
the pyramidal transform so that all G subbands have equal rate, matching
the one-chip-per-subcarrier mapping.  Boundaries are handled by circular
(periodic) extension, which keeps the transform orthonormal and therefore
perfectly reconstructing for any input length divisible by 2^levels.

Complex signals pass straight through: the filters are real, so acting on
a complex array equals acting on the real and imaginary parts separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

_SUPPORTED_TAPS = (2, 4, 6, 8)


@dataclass(frozen=True)
class WaveletSpec:
    """Filter length and tree depth.  taps=2 is the Haar degenerate case."""

    taps: int = 4
    levels: int = 3

    def __post_init__(self) -> None:
        if self.taps not in _SUPPORTED_TAPS:
            raise ValueError(f"unsupported tap count {self.taps}, expected one of {_SUPPORTED_TAPS}")
        if self.levels < 1:
            raise ValueError("tree depth must be at least 1")

    @property
    def subbands(self) -> int:
        return 1 << self.levels


@lru_cache(maxsize=None)
def daubechies_filters(taps: int) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal Daubechies lowpass/highpass pair of the given length.

    The lowpass h is built by spectral factorization: the halfband
    polynomial with taps/2 vanishing moments is factored and the roots
    inside the unit circle are kept (extremal-phase convention), giving
    sum(h) = sqrt(2) and sum(h^2) = 1 to machine precision.  The highpass
    is the quadrature mirror g[n] = (-1)^n h[taps-1-n].
    """
    if taps not in _SUPPORTED_TAPS:
        raise ValueError(f"unsupported tap count {taps}, expected one of {_SUPPORTED_TAPS}")
    p = taps // 2
    if p == 1:
        h = np.array([1.0, 1.0]) / np.sqrt(2.0)
    else:
        # P(y) = sum_k C(p-1+k, k) y^k evaluated at y = (2 - z - 1/z)/4,
        # cleared of negative powers: coefficients low -> high in z.
        halfband = np.zeros(2 * p - 1)
        y_in_z = np.array([-0.25, 0.5, -0.25])
        for k in range(p):
            term = np.array([1.0])
            for _ in range(k):
                term = np.convolve(term, y_in_z)
            halfband[p - 1 - k : p + k] += comb(p - 1 + k, k) * term
        roots = np.roots(halfband[::-1])
        inside = roots[np.abs(roots) < 1.0]
        coeffs = np.array([1.0])
        for _ in range(p):  # (1+z)^p factor: p vanishing moments
            coeffs = np.convolve(coeffs, [1.0, 1.0])
        for r in inside:
            coeffs = np.convolve(coeffs, [1.0, -r])
        h = np.real(coeffs)
        h *= np.sqrt(2.0) / h.sum()
    g = h[::-1].copy()
    g[1::2] *= -1.0
    h.setflags(write=False)
    g.setflags(write=False)
    return h, g


def _split(nodes: np.ndarray, h: np.ndarray, g: np.ndarray) -> np.ndarray:
    """One analysis level applied to every tree node (rows) at once."""
    n = nodes.shape[1]
    idx = (2 * np.arange(n // 2)[:, None] + np.arange(h.size)[None, :]) % n
    windows = nodes[:, idx]
    out = np.empty((2 * nodes.shape[0], n // 2), dtype=nodes.dtype)
    out[0::2] = windows @ h
    out[1::2] = windows @ g
    return out


def _merge(nodes: np.ndarray, h: np.ndarray, g: np.ndarray) -> np.ndarray:
    """One synthesis level: merge (low, high) row pairs by upsample + filter."""
    lo = nodes[0::2]
    hi = nodes[1::2]
    m = lo.shape[1]
    n = 2 * m
    out = np.zeros((lo.shape[0], n), dtype=nodes.dtype)
    base = 2 * np.arange(m)
    for i in range(h.size):
        out[:, (base + i) % n] += h[i] * lo + g[i] * hi
    return out


def dwt_analyze(signal: np.ndarray, spec: WaveletSpec) -> np.ndarray:
    """Full packet analysis: (n,) signal -> (2^levels, n / 2^levels) subbands.

    Subband j follows the tree path given by the bits of j (MSB first,
    0 = lowpass); exact inverse of :func:`idwt_synthesize`.
    """
    x = np.asarray(signal, dtype=complex)
    if x.ndim != 1:
        raise ValueError("expected a one-dimensional signal")
    if x.size == 0 or x.size % (1 << spec.levels):
        raise ValueError(f"signal length {x.size} not divisible by {1 << spec.levels}")
    h, g = daubechies_filters(spec.taps)
    nodes = x[None, :]
    for _ in range(spec.levels):
        nodes = _split(nodes, h, g)
    return nodes


def idwt_synthesize(subbands: np.ndarray, spec: WaveletSpec) -> np.ndarray:
    """Full packet synthesis: (2^levels, m) subbands -> (m * 2^levels,) signal."""
    nodes = np.asarray(subbands, dtype=complex)
    if nodes.ndim != 2:
        raise ValueError("expected a 2-D array of subband rows")
    if nodes.shape[0] != 1 << spec.levels:
        raise ValueError(f"expected {1 << spec.levels} subbands, got {nodes.shape[0]}")
    h, g = daubechies_filters(spec.taps)
    while nodes.shape[0] > 1:
        nodes = _merge(nodes, h, g)
    return nodes[0]
