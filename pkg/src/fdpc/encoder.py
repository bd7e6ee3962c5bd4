"""Systematic encoding via the sequential parity recursion.

The first m_size columns of an FDPC parity-check matrix form a
lower-bidiagonal block, so row i gives p_i = p_{i-1} + b_i . m over GF(2),
where b_i is row i of the message-side submatrix.  Codewords are laid out
as (parities, message).
"""

from __future__ import annotations

import numpy as np

from .construction import FdpcCode


def encode(code: FdpcCode, message) -> np.ndarray:
    """Encode a length-K message; returns the length-N codeword (p, m)."""
    m = np.asarray(message, dtype=np.uint8)
    if m.shape != (code.k,):
        raise ValueError(f"expected a length-{code.k} message, got shape {m.shape}")
    row_idx, col_idx = code.message_edge_arrays
    bm = np.bincount(
        row_idx,
        weights=m[col_idx].astype(np.float64),
        minlength=code.m_size,
    ).astype(np.int64) & 1
    # p_i = p_{i-1} xor (b_i . m): a running GF(2) prefix sum.
    p = (np.cumsum(bm) & 1).astype(np.uint8)
    return np.concatenate([p, m])


def is_codeword(code: FdpcCode, c) -> bool:
    """True iff the syndrome of c under the code's parity-check matrix is zero."""
    return not np.any(code.h.syndrome(c))
