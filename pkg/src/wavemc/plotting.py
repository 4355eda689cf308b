"""Render BER-vs-SNR curves to image files next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from wavemc.alamouti import stbc_theoretical_ber
from wavemc.link import BerCurve

_MARKERS = "osv^Dpx*"


def curve_label(curve: BerCurve) -> str:
    cfg = curve.config
    tag = "coded" if cfg.coded else "uncoded"
    return f"{cfg.scheme.value} {cfg.channel.value} {tag}"


def save_ber_figure(
    curves: list[BerCurve], path: str | Path, theory: str | None = None
) -> Path:
    """Semilog BER plot, one line per curve; zero-error points are omitted."""
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for i, curve in enumerate(curves):
        snrs = [pt.snr_db for pt in curve.points]
        bers = np.array([pt.ber for pt in curve.points])
        ax.semilogy(
            snrs,
            np.where(bers > 0, bers, np.nan),
            marker=_MARKERS[i % len(_MARKERS)],
            markersize=4,
            linewidth=1.2,
            label=curve_label(curve),
        )
    if theory == "alamouti-bpsk" and curves:
        grid = sorted({pt.snr_db for curve in curves for pt in curve.points})
        ref = stbc_theoretical_ber(10.0 ** (np.array(grid) / 10.0))
        ax.semilogy(grid, ref, "k--", linewidth=1.0, label="Alamouti BPSK theory")
    ax.set_xlabel("Eb/N0 per bit (dB)")
    ax.set_ylabel("BER")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8, ncol=1 if len(curves) <= 8 else 2)
    out = Path(path)
    fig.savefig(out, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return out
