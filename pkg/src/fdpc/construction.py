"""FDPC code construction: base matrices, permutation cascading, shortening.

A base matrix has 2t rows and columns of weight exactly two; the two ones in
a column are separated by a structured gap (number of zero rows between
them).  Variant 1 uses every even gap 0, 2, ..., 2t-2 and has t^2 columns;
variant 2 keeps only gaps 0, 4, 8, ... and has t(t+1)/2 columns.

The full parity-check matrix stacks `num_per` randomly column-permuted
copies of the message-side submatrix under the base, then overwrites the
first m_size = 2t*(num_per+1) columns with a lower-bidiagonal block so that
parity bits can be computed by a sequential recursion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np

from .matrix import BinaryMatrix


class BaseVariant(enum.Enum):
    BASE1 = 1
    BASE2 = 2


def generate_base_matrix(t: int, variant: BaseVariant) -> BinaryMatrix:
    """Build the 2t-row base matrix for the given variant.

    Columns are grouped by ascending gap; within the gap-g group, column i
    (0-based) is supported on rows {i, i+g+1}.
    """
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    pairs = []
    for gap in range(0, 2 * t - 1, 2):
        for i in range(2 * t - gap - 1):
            pairs.append((i, i + gap + 1))
    if variant is BaseVariant.BASE2:
        # Drop gaps 2, 6, 10, ...; keep 0, 4, 8, ...
        pairs = [(a, b) for a, b in pairs if (b - a - 1) % 4 == 0]
    incidences = []
    for col, (a, b) in enumerate(pairs):
        incidences.append((a, col))
        incidences.append((b, col))
    return BinaryMatrix.from_incidences(2 * t, len(pairs), incidences)


def base_column_count(t: int, variant: BaseVariant) -> int:
    return t * t if variant is BaseVariant.BASE1 else t * (t + 1) // 2


@dataclass(frozen=True)
class FdpcCode:
    """A constructed FDPC code and everything needed to reproduce it."""

    h: BinaryMatrix
    n: int
    k: int
    t: int
    variant: BaseVariant
    num_per: int
    m_size: int
    permutations: Tuple[Tuple[int, ...], ...]
    seed: int

    @cached_property
    def message_row_supports(self) -> Tuple[Tuple[int, ...], ...]:
        """Per parity row, the message-bit indices (column - m_size) it checks."""
        return tuple(
            tuple(c - self.m_size for c in sup if c >= self.m_size)
            for sup in self.h.row_supports
        )

    @cached_property
    def message_edge_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Flat (parity_row, message_index) arrays over the message submatrix."""
        rows_idx = []
        cols_idx = []
        for i, sup in enumerate(self.message_row_supports):
            rows_idx.extend([i] * len(sup))
            cols_idx.extend(sup)
        return (
            np.asarray(rows_idx, dtype=np.int64),
            np.asarray(cols_idx, dtype=np.int64),
        )

    def descriptor(self) -> str:
        """Plain-text header identifying the construction."""
        return (
            f"t={self.t}\n"
            f"base={self.variant.value}\n"
            f"num_per={self.num_per}\n"
            f"N={self.n}\n"
            f"K={self.k}\n"
            f"seed={self.seed}\n"
        )


def build_fdpc(
    t: int,
    variant: BaseVariant,
    num_per: int,
    n_target: int,
    seed: int,
) -> FdpcCode:
    """Construct an FDPC(n_target, n_target - 2t*(num_per+1)) code.

    The random column permutations are drawn from numpy's seeded PCG64
    generator (Fisher-Yates shuffle), so identical inputs give identical
    matrices on any platform.
    """
    if num_per < 0:
        raise ValueError(f"num_per must be >= 0, got {num_per}")
    m_base = 2 * t
    m_size = m_base * (num_per + 1)
    base = generate_base_matrix(t, variant)
    n_base = base.cols
    if not (m_size < n_target <= n_base):
        raise ValueError(
            f"need m_size < N <= base columns, got m_size={m_size}, "
            f"N={n_target}, base columns={n_base}"
        )

    # Message-side submatrix C: base columns m_size.. (supports within 2t rows).
    c_supports = base.col_supports[m_size:]
    num_c = n_base - m_size
    rng = np.random.default_rng(seed)
    perms = tuple(tuple(int(v) for v in rng.permutation(num_c)) for _ in range(num_per))

    n_delete = n_base - n_target
    incidences = []
    # Bidiagonal block over the parity columns.
    for j in range(m_size - 1):
        incidences.append((j, j))
        incidences.append((j + 1, j))
    incidences.append((m_size - 1, m_size - 1))
    # Stacked message-side blocks: row block 0 is C itself, block i is the
    # i-th permuted copy; columns 0..n_delete-1 of C are removed (shortening).
    for j in range(n_delete, num_c):
        col = m_size + (j - n_delete)
        for r in c_supports[j]:
            incidences.append((r, col))
        for i, perm in enumerate(perms, start=1):
            for r in c_supports[perm[j]]:
                incidences.append((i * m_base + r, col))

    h = BinaryMatrix.from_incidences(m_size, n_target, incidences)
    return FdpcCode(
        h=h,
        n=n_target,
        k=n_target - m_size,
        t=t,
        variant=variant,
        num_per=num_per,
        m_size=m_size,
        permutations=perms,
        seed=seed,
    )
