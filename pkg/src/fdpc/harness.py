"""Seeded Monte Carlo FER/BER sweeps with a deterministic worker pool.

Every frame owns an independent RNG substream seeded by
(master_seed, snr_index, frame_index), so tallies are identical no matter
how frames are split across workers.  Frames are processed in fixed-size
batches; the target-frame-error stopping rule is evaluated at batch
boundaries, which keeps the stopping point independent of the worker
count as well.
"""

from __future__ import annotations

import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .channel import ChannelConfig, channel_llr, modulate_bpsk, transmit_awgn
from .construction import BaseVariant, FdpcCode, build_fdpc
from .decoder import DecoderConfig, MinSumDecoder
from .encoder import encode

CSV_COLUMNS = ("ebn0_db", "frames", "frame_errors", "bit_errors", "fer", "ber", "avg_iters")


@dataclass(frozen=True)
class SimConfig:
    t: int
    variant: BaseVariant
    num_per: int
    n: int
    code_seed: int
    snr_points_db: Tuple[float, ...]
    max_frames: int = 10_000
    target_frame_errors: int = 100
    decoder: DecoderConfig = field(default_factory=DecoderConfig)
    master_seed: int = 0
    workers: int = 1
    batch_size: int = 500

    def __post_init__(self):
        if not self.snr_points_db:
            raise ValueError("snr_points_db must be nonempty")
        if self.max_frames < 1:
            raise ValueError(f"max_frames must be >= 1, got {self.max_frames}")
        if self.target_frame_errors < 1:
            raise ValueError(f"target_frame_errors must be >= 1, got {self.target_frame_errors}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")


@dataclass(frozen=True)
class SimPoint:
    ebn0_db: float
    frames: int
    frame_errors: int
    bit_errors: int
    avg_iters: float

    @property
    def fer(self) -> float:
        return self.frame_errors / self.frames

    def ber(self, k: int) -> float:
        return self.bit_errors / (self.frames * k)


@dataclass(frozen=True)
class SimResult:
    config: SimConfig
    code: FdpcCode
    points: Tuple[SimPoint, ...]

    def to_csv(self) -> str:
        """CSV body with '#'-prefixed parameter header lines."""
        cfg = self.config
        buf = io.StringIO()
        header = {
            "t": cfg.t,
            "base": cfg.variant.value,
            "num_per": cfg.num_per,
            "N": cfg.n,
            "K": self.code.k,
            "code_seed": cfg.code_seed,
            "master_seed": cfg.master_seed,
            "max_frames": cfg.max_frames,
            "target_frame_errors": cfg.target_frame_errors,
            "batch_size": cfg.batch_size,
            "max_iters": cfg.decoder.max_iters,
            "alpha": cfg.decoder.alpha,
            "early_stop": "on" if cfg.decoder.early_stop else "off",
        }
        for key, val in header.items():
            buf.write(f"# {key}={val}\n")
        buf.write(",".join(CSV_COLUMNS) + "\n")
        for pt in self.points:
            buf.write(
                f"{pt.ebn0_db:g},{pt.frames},{pt.frame_errors},{pt.bit_errors},"
                f"{pt.fer:.10g},{pt.ber(self.code.k):.10g},{pt.avg_iters:.10g}\n"
            )
        return buf.getvalue()


_WORKER_STATE = {}


def _init_worker(code: FdpcCode, dec_cfg: DecoderConfig):
    _WORKER_STATE["code"] = code
    _WORKER_STATE["decoder"] = MinSumDecoder(code.h, dec_cfg)


def _run_chunk_pooled(args):
    return _run_chunk(_WORKER_STATE["code"], _WORKER_STATE["decoder"], *args)


def _run_chunk(code, decoder, sigma, master_seed, snr_index, lo, hi):
    """Simulate frames lo..hi-1; returns (frames, frame_errs, bit_errs, iter_sum)."""
    frames = frame_errs = bit_errs = iter_sum = 0
    m_size = code.m_size
    for f in range(lo, hi):
        rng = np.random.default_rng([master_seed, snr_index, f])
        msg = rng.integers(0, 2, size=code.k, dtype=np.uint8)
        x = modulate_bpsk(encode(code, msg))
        y = transmit_awgn(x, sigma, rng)
        res = decoder.decode(channel_llr(y, sigma))
        nerr = int(np.count_nonzero(res.bits[m_size:] != msg))
        frames += 1
        frame_errs += 1 if nerr else 0
        bit_errs += nerr
        iter_sum += res.iterations_used
    return frames, frame_errs, bit_errs, iter_sum


def run_point(
    code: FdpcCode,
    ebn0_db: float,
    cfg: SimConfig,
    snr_index: Optional[int] = None,
    pool: Optional[ProcessPoolExecutor] = None,
    decoder: Optional[MinSumDecoder] = None,
) -> SimPoint:
    """Monte Carlo tallies for one SNR point."""
    if snr_index is None:
        snr_index = cfg.snr_points_db.index(ebn0_db)
    sigma = ChannelConfig(ebn0_db=ebn0_db, rate=code.k / code.n).sigma
    if decoder is None:
        decoder = MinSumDecoder(code.h, cfg.decoder)
    frames = frame_errs = bit_errs = iter_sum = 0
    next_frame = 0
    while frames < cfg.max_frames and frame_errs < cfg.target_frame_errors:
        hi = min(next_frame + cfg.batch_size, cfg.max_frames)
        bounds = np.linspace(next_frame, hi, cfg.workers + 1).astype(int)
        chunks = [
            (sigma, cfg.master_seed, snr_index, int(lo), int(hi_))
            for lo, hi_ in zip(bounds[:-1], bounds[1:])
            if hi_ > lo
        ]
        if pool is not None:
            results = list(pool.map(_run_chunk_pooled, chunks))
        else:
            results = [_run_chunk(code, decoder, *c) for c in chunks]
        for fr, fe, be, it in results:
            frames += fr
            frame_errs += fe
            bit_errs += be
            iter_sum += it
        next_frame = hi
    return SimPoint(
        ebn0_db=ebn0_db,
        frames=frames,
        frame_errors=frame_errs,
        bit_errors=bit_errs,
        avg_iters=iter_sum / frames,
    )


def run_sweep(cfg: SimConfig, out_path: Optional[str] = None) -> SimResult:
    """Run every SNR point of the sweep; optionally persist the CSV."""
    code = build_fdpc(cfg.t, cfg.variant, cfg.num_per, cfg.n, cfg.code_seed)
    decoder = MinSumDecoder(code.h, cfg.decoder)
    pool = None
    try:
        if cfg.workers > 1:
            pool = ProcessPoolExecutor(
                max_workers=cfg.workers,
                initializer=_init_worker,
                initargs=(code, cfg.decoder),
            )
        points = tuple(
            run_point(code, ebn0, cfg, snr_index=i, pool=pool, decoder=decoder)
            for i, ebn0 in enumerate(cfg.snr_points_db)
        )
    finally:
        if pool is not None:
            pool.shutdown()
    result = SimResult(config=cfg, code=code, points=points)
    if out_path is not None:
        with open(out_path, "w") as fh:
            fh.write(result.to_csv())
    return result
