"""Fair-density parity-check codes: construction, encoding, decoding, simulation."""

from .analysis import (
    RingGraph,
    count_4cycles,
    density,
    girth,
    min_distance_enumerate,
    ring_graph,
)
from .channel import ChannelConfig, channel_llr, modulate_bpsk, transmit_awgn
from .construction import BaseVariant, FdpcCode, build_fdpc, generate_base_matrix
from .decoder import DecodeResult, DecoderConfig, MinSumDecoder, decode
from .encoder import encode, is_codeword
from .harness import SimConfig, SimPoint, SimResult, run_point, run_sweep
from .matrix import BinaryMatrix

__all__ = [
    "BaseVariant",
    "BinaryMatrix",
    "ChannelConfig",
    "DecodeResult",
    "DecoderConfig",
    "FdpcCode",
    "MinSumDecoder",
    "RingGraph",
    "SimConfig",
    "SimPoint",
    "SimResult",
    "build_fdpc",
    "channel_llr",
    "count_4cycles",
    "decode",
    "density",
    "encode",
    "generate_base_matrix",
    "girth",
    "is_codeword",
    "min_distance_enumerate",
    "modulate_bpsk",
    "ring_graph",
    "run_point",
    "run_sweep",
    "transmit_awgn",
]
