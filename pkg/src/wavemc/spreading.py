"""Walsh-Hadamard spreading: codebook, per-user copier/multiplier, despreading."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class HadamardCodebook:
    """Sylvester-constructed +-1 codebook with users assigned rows 0..users-1."""

    order: int
    rows: np.ndarray
    assignment: tuple[int, ...]

    def row(self, user: int) -> np.ndarray:
        return self.rows[self.assignment[user]]


def hadamard_codebook(order: int, users: int) -> HadamardCodebook:
    """Build the order x order Sylvester-Hadamard matrix and assign users.

    rows @ rows.T == order * I holds exactly (integer entries).
    """
    if order < 1 or order & (order - 1):
        raise ValueError(f"processing gain {order} is not a power of two")
    if not 1 <= users <= order:
        raise ValueError(f"cannot assign {users} users to {order} orthogonal rows")
    h = np.array([[1]], dtype=np.int64)
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    h.setflags(write=False)
    return HadamardCodebook(order=order, rows=h, assignment=tuple(range(users)))


def spread(symbols: np.ndarray, code_row: np.ndarray) -> np.ndarray:
    """Copy each symbol over G chips and multiply by the user's code row."""
    row = np.asarray(code_row)
    if row.size == 0:
        raise ValueError("empty code row")
    return np.kron(np.asarray(symbols, dtype=complex), row.astype(float))


def superpose(frames: list[np.ndarray] | tuple[np.ndarray, ...]) -> np.ndarray:
    """Element-wise sum of equal-length user chip frames."""
    if not frames:
        raise ValueError("no frames to superpose")
    lengths = {np.asarray(f).size for f in frames}
    if len(lengths) != 1:
        raise ValueError(f"chip frame length mismatch: {sorted(lengths)}")
    out = np.zeros(lengths.pop(), dtype=complex)
    for f in frames:
        out += np.asarray(f, dtype=complex)
    return out


def despread(chips: np.ndarray, code_row: np.ndarray, gain: int | None = None) -> np.ndarray:
    """Correlate chips against a code row: per symbol (1/G) * sum(chip * c).

    The 1/G normalization returns decision variables on the constellation
    scale.
    """
    row = np.asarray(code_row)
    if row.size == 0:
        raise ValueError("empty code row")
    g = row.size if gain is None else gain
    if g != row.size:
        raise ValueError("gain does not match the code row length")
    c = np.asarray(chips, dtype=complex)
    if c.size % g != 0:
        raise ValueError(f"chip frame length {c.size} is not a multiple of G={g}")
    return c.reshape(-1, g) @ row.astype(float) / g
