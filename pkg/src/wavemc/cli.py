"""Command line interface for BER sweeps, result files, and figures."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from wavemc.channel import ChannelKind
from wavemc.fec import CodeConfig, InterleaverShape
from wavemc.link import DEFAULT_SEED, BerCurve, LinkConfig, run_point, table1_configs
from wavemc.modem import Modulation
from wavemc.results import THEORY_MODELS, emit_results


@dataclass(frozen=True)
class CliOptions:
    configs: tuple[LinkConfig, ...]
    out: str | None
    format: str
    theory: str | None
    plot: bool


def _parse_snr_grid(text: str) -> tuple[float, ...]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected MIN:STEP:MAX, got {text!r}")
    try:
        lo, step, hi = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric SNR range {text!r}")
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError("SNR range requires STEP > 0 and MAX >= MIN")
    grid = []
    value = lo
    while value <= hi + 1e-9:
        grid.append(round(value, 10))
        value += step
    return tuple(grid)


def _parse_wavelet(text: str) -> int:
    if text.startswith("db") and text[2:].isdigit():
        order = int(text[2:])
        if 1 <= order <= 4:
            return 2 * order
    raise argparse.ArgumentTypeError(f"expected db1..db4 (tap count 2N), got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavemc",
        description=(
            "Monte Carlo BER simulation of a wavelet multicarrier CDMA downlink "
            "with 2x1 Alamouti diversity and optional interleaved convolutional FEC."
        ),
    )
    parser.add_argument("--scheme", choices=[m.value for m in Modulation], default="bpsk")
    parser.add_argument("--channel", choices=[c.value for c in ChannelKind], default="awgn")
    coding = parser.add_mutually_exclusive_group()
    coding.add_argument("--coded", action="store_true", help="rate-1/2 trellis code + interleaver")
    coding.add_argument("--uncoded", action="store_true", help="no FEC (default)")
    parser.add_argument("--users", type=int, default=None, help="active users K (default 4)")
    parser.add_argument("--gain", type=int, default=8, help="processing gain G = subcarriers")
    parser.add_argument("--bits", type=int, default=10_000, help="information bits per user")
    parser.add_argument("--snr", type=_parse_snr_grid, default="0:1:10", metavar="MIN:STEP:MAX")
    parser.add_argument("--wavelet", type=_parse_wavelet, default="db2", metavar="dbN")
    parser.add_argument("--generators", default="7,5", metavar="G1,G2", help="octal code taps")
    parser.add_argument("--interleaver", default=None, metavar="RxC", help="block shape")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--preset", choices=["table1"], default=None)
    parser.add_argument("--theory", choices=list(THEORY_MODELS), default=None)
    parser.add_argument("--out", default=None, metavar="FILE")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--plot", action="store_true", help="render a BER figure next to --out")
    parser.add_argument(
        "--bypass-calibration",
        action="store_true",
        help="single antenna, no spreading/wavelet/STBC (theory anchoring mode)",
    )
    return parser


def parse_cli(argv: list[str] | None = None) -> CliOptions:
    parser = build_parser()
    args = parser.parse_args(argv)

    snr_grid = args.snr if isinstance(args.snr, tuple) else _parse_snr_grid(args.snr)
    wavelet_taps = args.wavelet if isinstance(args.wavelet, int) else _parse_wavelet(args.wavelet)
    users = args.users
    if users is None:
        users = 1 if args.bypass_calibration else 4

    try:
        code = CodeConfig.from_text(args.generators)
        interleaver = InterleaverShape.from_text(args.interleaver) if args.interleaver else None
        base = LinkConfig(
            users=users,
            gain=args.gain,
            scheme=Modulation(args.scheme),
            coded=args.coded,
            channel=ChannelKind(args.channel),
            wavelet_taps=wavelet_taps,
            code=code,
            interleaver=interleaver,
            snr_grid_db=snr_grid,
            bits_per_user=args.bits,
            seed=args.seed,
            calibration_bypass=args.bypass_calibration,
        )
    except ValueError as exc:
        parser.error(str(exc))

    if args.preset == "table1":
        configs = tuple(
            replace(cfg, snr_grid_db=snr_grid, bits_per_user=args.bits, seed=args.seed)
            for cfg in table1_configs()
        )
    else:
        configs = (base,)

    return CliOptions(
        configs=configs,
        out=args.out,
        format=args.format,
        theory=args.theory,
        plot=args.plot,
    )


def _run(options: CliOptions) -> list[BerCurve]:
    curves = []
    for cfg in options.configs:
        tag = f"{cfg.scheme.value} {cfg.channel.value} {'coded' if cfg.coded else 'uncoded'}"
        if cfg.calibration_bypass:
            tag += " (bypass)"
        print(f"# {tag}: K={cfg.users} G={cfg.gain} bits/user={cfg.bits_per_user}")
        points = []
        for idx, snr_db in enumerate(cfg.snr_grid_db):
            pt = run_point(cfg, snr_db, seed=(cfg.seed, idx))
            points.append(pt)
            print(f"  snr={snr_db:5.1f} dB  ber={pt.ber:.6g}  ({pt.bit_errors}/{pt.bits_counted})")
        curves.append(BerCurve(config=cfg, points=tuple(points)))
    return curves


def main(argv: list[str] | None = None) -> int:
    options = parse_cli(argv)
    curves = _run(options)
    content = emit_results(curves, format=options.format, path=options.out, theory=options.theory)
    if options.out is None:
        sys.stdout.write(content)
    else:
        print(f"# wrote {options.out}")
    if options.plot:
        from wavemc.plotting import save_ber_figure

        if options.out is not None:
            figure_path = Path(options.out).with_suffix(".png")
        else:
            figure_path = Path("ber.png")
        save_ber_figure(curves, figure_path, theory=options.theory)
        print(f"# wrote {figure_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
