"""Flooding-schedule normalized min-sum decoder.

Check-node outputs are the product of the signs of the other incoming
messages times the minimum of their magnitudes, scaled by alpha; variable
nodes add the channel LLR to the incoming check messages.  Hard decision
is bit 1 iff the posterior is negative (ties decide bit 0).  With
early_stop on, the syndrome of the hard decision is checked after every
iteration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .construction import FdpcCode
from .matrix import BinaryMatrix


@dataclass(frozen=True)
class DecoderConfig:
    max_iters: int = 50
    alpha: float = 0.75
    early_stop: bool = True
    llr_clamp: Optional[float] = None  # fixed-point emulation only; off by default

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")


@dataclass(frozen=True)
class DecodeResult:
    bits: np.ndarray
    iterations_used: int
    converged: bool


class MinSumDecoder:
    """Edge-array decoder for a fixed parity-check matrix and config.

    Precomputes the Tanner-graph edge layout once; decode() is then a pure
    function of the input LLRs, safe to call concurrently.
    """

    def __init__(self, h: BinaryMatrix, cfg: DecoderConfig):
        self.h = h
        self.cfg = cfg
        edge_var = []
        seg_starts = []
        edge_seg = []
        seg = 0
        pos = 0
        for sup in h.row_supports:
            if not sup:
                continue
            seg_starts.append(pos)
            edge_var.extend(sup)
            edge_seg.extend([seg] * len(sup))
            pos += len(sup)
            seg += 1
        self._edge_var = np.asarray(edge_var, dtype=np.int64)
        self._seg_starts = np.asarray(seg_starts, dtype=np.int64)
        self._edge_seg = np.asarray(edge_seg, dtype=np.int64)

    @property
    def edges(self):
        """(check_row, variable) per edge, in internal edge order."""
        out = []
        for r, sup in enumerate(self.h.row_supports):
            out.extend((r, v) for v in sup)
        return out

    def message_trace(self, llr, num_iters: int):
        """Per-iteration (c2v, v2c, posterior) edge/posterior arrays, no early stop.

        Used to cross-check the decoder message-for-message against a
        definitional reference; indexes follow `edges`.
        """
        llr = np.asarray(llr, dtype=np.float64)
        ev = self._edge_var
        v2c = llr[ev]
        trace = []
        for _ in range(num_iters):
            c2v = self._check_update(v2c)
            tot = np.bincount(ev, weights=c2v, minlength=self.h.cols)
            post = llr + tot
            v2c = post[ev] - c2v
            trace.append((c2v.copy(), v2c.copy(), post.copy()))
        return trace

    def _check_update(self, v2c: np.ndarray) -> np.ndarray:
        starts = self._seg_starts
        seg = self._edge_seg
        sgn = np.sign(v2c)
        mag = np.abs(v2c)
        zero = sgn == 0.0
        nz_sgn = np.where(zero, 1.0, sgn)
        prod_nz = np.multiply.reduceat(nz_sgn, starts)
        zcnt = np.add.reduceat(zero.astype(np.int64), starts)
        m1 = np.minimum.reduceat(mag, starts)
        at_min = mag == m1[seg]
        min_cnt = np.add.reduceat(at_min.astype(np.int64), starts)
        masked = np.where(at_min, np.inf, mag)
        m2 = np.minimum.reduceat(masked, starts)
        excl_min = np.where(at_min & (min_cnt[seg] == 1), m2[seg], m1[seg])
        others_zeros = zcnt[seg] - zero.astype(np.int64)
        excl_sgn = np.where(others_zeros > 0, 0.0, prod_nz[seg] * nz_sgn)
        return self.cfg.alpha * excl_sgn * excl_min

    def decode(self, llr) -> DecodeResult:
        llr = np.asarray(llr, dtype=np.float64)
        if llr.shape != (self.h.cols,):
            raise ValueError(f"expected {self.h.cols} LLRs, got shape {llr.shape}")
        if not np.all(np.isfinite(llr)):
            raise ValueError("channel LLRs must be finite")
        cfg = self.cfg
        ev = self._edge_var
        v2c = llr[ev]
        bits = (llr < 0).astype(np.uint8)
        for it in range(1, cfg.max_iters + 1):
            c2v = self._check_update(v2c)
            tot = np.bincount(ev, weights=c2v, minlength=self.h.cols)
            post = llr + tot
            v2c = post[ev] - c2v
            if cfg.llr_clamp is not None:
                np.clip(v2c, -cfg.llr_clamp, cfg.llr_clamp, out=v2c)
                np.clip(post, -cfg.llr_clamp, cfg.llr_clamp, out=post)
            bits = (post < 0).astype(np.uint8)
            if cfg.early_stop and not np.any(self.h.syndrome(bits)):
                return DecodeResult(bits=bits, iterations_used=it, converged=True)
        converged = not np.any(self.h.syndrome(bits))
        return DecodeResult(bits=bits, iterations_used=cfg.max_iters, converged=converged)


def decode(code: Union[FdpcCode, BinaryMatrix], llr, cfg: DecoderConfig) -> DecodeResult:
    """One-shot decode; builds the edge layout on each call."""
    h = code.h if isinstance(code, FdpcCode) else code
    return MinSumDecoder(h, cfg).decode(llr)
