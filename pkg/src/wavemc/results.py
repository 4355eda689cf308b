"""Results persistence: CSV rows per point, canonical JSON with full config."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from wavemc.alamouti import stbc_theoretical_ber
from wavemc.channel import ChannelKind
from wavemc.fec import CodeConfig, InterleaverShape
from wavemc.link import BerCurve, BerPoint, LinkConfig
from wavemc.modem import Modulation

CSV_HEADER = ("users", "scheme", "channel", "coded", "snr_db", "bits", "errors", "ber")

THEORY_MODELS = ("alamouti-bpsk",)


def _fmt(value: float) -> str:
    return format(float(value), ".8g")


def _check_theory(theory: str | None) -> None:
    if theory is not None and theory not in THEORY_MODELS:
        raise ValueError(f"unknown theory model {theory!r}, expected one of {THEORY_MODELS}")


def curves_to_csv(curves: list[BerCurve], theory: str | None = None) -> str:
    _check_theory(theory)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER + (("theory",) if theory else ()))
    for curve in curves:
        cfg = curve.config
        for pt in curve.points:
            row = [
                cfg.users,
                cfg.scheme.value,
                cfg.channel.value,
                "true" if cfg.coded else "false",
                _fmt(pt.snr_db),
                pt.bits_counted,
                pt.bit_errors,
                _fmt(pt.ber),
            ]
            if theory:
                row.append(_fmt(stbc_theoretical_ber(10.0 ** (pt.snr_db / 10.0))))
            writer.writerow(row)
    return buf.getvalue()


def _config_to_dict(cfg: LinkConfig) -> dict:
    return {
        "users": cfg.users,
        "gain": cfg.gain,
        "scheme": cfg.scheme.value,
        "coded": cfg.coded,
        "channel": cfg.channel.value,
        "wavelet_taps": cfg.wavelet_taps,
        "generators": ",".join(format(g, "o") for g in cfg.code.generators),
        "constraint_length": cfg.code.constraint_length,
        "traceback_depth": cfg.code.traceback_depth,
        "interleaver": (
            f"{cfg.interleaver.rows}x{cfg.interleaver.cols}" if cfg.interleaver else None
        ),
        "snr_grid_db": list(cfg.snr_grid_db),
        "bits_per_user": cfg.bits_per_user,
        "seed": cfg.seed,
        "calibration_bypass": cfg.calibration_bypass,
    }


def _config_from_dict(data: dict) -> LinkConfig:
    return LinkConfig(
        users=data["users"],
        gain=data["gain"],
        scheme=Modulation(data["scheme"]),
        coded=data["coded"],
        channel=ChannelKind(data["channel"]),
        wavelet_taps=data["wavelet_taps"],
        code=CodeConfig(
            constraint_length=data["constraint_length"],
            generators=tuple(int(tok, 8) for tok in data["generators"].split(",")),
            traceback_depth=data["traceback_depth"],
        ),
        interleaver=(
            InterleaverShape.from_text(data["interleaver"]) if data["interleaver"] else None
        ),
        snr_grid_db=tuple(data["snr_grid_db"]),
        bits_per_user=data["bits_per_user"],
        seed=data["seed"],
        calibration_bypass=data["calibration_bypass"],
    )


def _point_to_dict(pt: BerPoint, theory: str | None) -> dict:
    data = {
        "snr_db": pt.snr_db,
        "bits": pt.bits_counted,
        "errors": pt.bit_errors,
        "ber": pt.ber,
        "per_user": [list(pair) for pair in pt.per_user],
    }
    if theory:
        data["theory"] = float(stbc_theoretical_ber(10.0 ** (pt.snr_db / 10.0)))
    return data


def _point_from_dict(data: dict) -> BerPoint:
    return BerPoint(
        snr_db=data["snr_db"],
        bits_counted=data["bits"],
        bit_errors=data["errors"],
        per_user=tuple((e, b) for e, b in data["per_user"]),
    )


def curves_to_json(curves: list[BerCurve], theory: str | None = None) -> str:
    _check_theory(theory)
    payload = {
        "curves": [
            {
                "config": _config_to_dict(curve.config),
                "points": [_point_to_dict(pt, theory) for pt in curve.points],
            }
            for curve in curves
        ]
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def emit_results(
    curves: list[BerCurve],
    format: str = "csv",
    path: str | Path | None = None,
    theory: str | None = None,
) -> str:
    """Serialize curves; write to ``path`` when given.  Returns the content."""
    if format == "csv":
        content = curves_to_csv(curves, theory=theory)
    elif format == "json":
        content = curves_to_json(curves, theory=theory)
    else:
        raise ValueError(f"unknown format {format!r}, expected csv or json")
    if path is not None:
        Path(path).write_text(content)
    return content


def load_results(source: str | Path) -> list[BerCurve]:
    """Parse curves back from JSON text or a JSON file path."""
    text = source if isinstance(source, str) and source.lstrip().startswith("{") else Path(source).read_text()
    payload = json.loads(text)
    return [
        BerCurve(
            config=_config_from_dict(entry["config"]),
            points=tuple(_point_from_dict(p) for p in entry["points"]),
        )
        for entry in payload["curves"]
    ]
