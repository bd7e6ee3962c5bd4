"""BPSK over the binary-input AWGN channel, and channel LLRs.

Sign convention throughout: positive LLR means bit 0 is more likely.
E_b is energy per information bit, so the code rate enters the noise
variance: sigma^2 = 1 / (2 * rate * 10^(ebn0_db/10)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChannelConfig:
    ebn0_db: float
    rate: float

    def __post_init__(self):
        if not (0.0 < self.rate <= 1.0):
            raise ValueError(f"rate must be in (0, 1], got {self.rate}")

    @property
    def sigma(self) -> float:
        return math.sqrt(1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0)))


def modulate_bpsk(bits) -> np.ndarray:
    """Map bit 0 -> +1.0 and bit 1 -> -1.0 (unit-energy symbols)."""
    b = np.asarray(bits)
    return 1.0 - 2.0 * b.astype(np.float64)


def transmit_awgn(x, sigma: float, rng: np.random.Generator) -> np.ndarray:
    """Add i.i.d. N(0, sigma^2) noise drawn from the given generator.

    numpy's Generator.normal (ziggurat over PCG64) is deterministic for a
    given generator state, which the simulation harness relies on.
    """
    if sigma <= 0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    x = np.asarray(x, dtype=np.float64)
    return x + rng.normal(0.0, sigma, size=x.shape)


def channel_llr(y, sigma: float) -> np.ndarray:
    """Per-symbol LLR of a BPSK symbol observed in AWGN: 2*y/sigma^2."""
    if sigma <= 0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    return 2.0 * np.asarray(y, dtype=np.float64) / (sigma * sigma)
