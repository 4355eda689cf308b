"""Wavelet multicarrier CDMA link simulator.

Monte Carlo BER simulation of a multi-user downlink that spreads each
user's symbols with Walsh-Hadamard codes, synthesizes the multicarrier
waveform with an inverse discrete wavelet (packet) transform, protects
it with 2x1 Alamouti space-time block coding, and optionally wraps the
payload in an interleaved rate-1/2 convolutional code.
"""

from wavemc.alamouti import alamouti_combine, alamouti_encode, stbc_theoretical_ber
from wavemc.channel import (
    ChannelBlocks,
    ChannelKind,
    NoiseCalibration,
    apply_channel,
    awgn,
    measure_snr,
    rayleigh_blocks,
)
from wavemc.fec import (
    CodeConfig,
    InterleaverShape,
    conv_encode,
    deinterleave,
    interleave,
    pad_frame,
    viterbi_decode,
)
from wavemc.link import BerCurve, BerPoint, LinkConfig, run_point, sweep, table1_configs
from wavemc.modem import Modulation, demodulate, modulate
from wavemc.results import emit_results, load_results
from wavemc.spreading import HadamardCodebook, despread, hadamard_codebook, spread, superpose
from wavemc.wavelet import WaveletSpec, daubechies_filters, dwt_analyze, idwt_synthesize

__version__ = "0.1.0"

__all__ = [
    "BerCurve",
    "BerPoint",
    "ChannelBlocks",
    "ChannelKind",
    "CodeConfig",
    "HadamardCodebook",
    "InterleaverShape",
    "LinkConfig",
    "Modulation",
    "NoiseCalibration",
    "WaveletSpec",
    "alamouti_combine",
    "alamouti_encode",
    "apply_channel",
    "awgn",
    "conv_encode",
    "daubechies_filters",
    "deinterleave",
    "demodulate",
    "despread",
    "dwt_analyze",
    "emit_results",
    "hadamard_codebook",
    "idwt_synthesize",
    "interleave",
    "load_results",
    "measure_snr",
    "modulate",
    "pad_frame",
    "rayleigh_blocks",
    "run_point",
    "spread",
    "stbc_theoretical_ber",
    "superpose",
    "sweep",
    "table1_configs",
    "viterbi_decode",
]
