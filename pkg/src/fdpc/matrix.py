"""Sparse binary (GF(2)) matrix with ordered supports and alist interchange.

Indices are 0-based internally; the alist format and all user-facing reports
are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable GF(2) matrix stored as per-column and per-row supports.

    The supports are the source of truth; both views describe the same set
    of (row, col) incidences and are strictly increasing within each
    column/row.
    """

    rows: int
    cols: int
    col_supports: Tuple[Tuple[int, ...], ...]
    row_supports: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_incidences(
        cls, rows: int, cols: int, incidences: Iterable[Tuple[int, int]]
    ) -> "BinaryMatrix":
        """Build a matrix from a list of (row, col) positions holding a 1."""
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        incidences = list(incidences)
        seen = set()
        for r, c in incidences:
            if not (0 <= r < rows) or not (0 <= c < cols):
                raise ValueError(f"incidence ({r}, {c}) out of range for {rows}x{cols}")
            if (r, c) in seen:
                raise ValueError(f"duplicate incidence ({r}, {c})")
            seen.add((r, c))
        col_sup = [[] for _ in range(cols)]
        row_sup = [[] for _ in range(rows)]
        for r, c in sorted(incidences):
            col_sup[c].append(r)
            row_sup[r].append(c)
        return cls(
            rows=rows,
            cols=cols,
            col_supports=tuple(tuple(s) for s in col_sup),
            row_supports=tuple(tuple(sorted(s)) for s in row_sup),
        )

    @cached_property
    def num_ones(self) -> int:
        return sum(len(s) for s in self.col_supports)

    @cached_property
    def _edge_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Flat (row_index, col_index) arrays over all incidences, row-major."""
        rows_idx = []
        cols_idx = []
        for r, sup in enumerate(self.row_supports):
            rows_idx.extend([r] * len(sup))
            cols_idx.extend(sup)
        return (
            np.asarray(rows_idx, dtype=np.int64),
            np.asarray(cols_idx, dtype=np.int64),
        )

    def syndrome(self, c: Sequence[int]) -> np.ndarray:
        """GF(2) product H . c^T; all-zero iff c is a codeword."""
        bits = np.asarray(c, dtype=np.uint8)
        if bits.shape != (self.cols,):
            raise ValueError(f"expected a length-{self.cols} bit vector, got {bits.shape}")
        erow, ecol = self._edge_arrays
        sums = np.bincount(erow, weights=bits[ecol].astype(np.float64), minlength=self.rows)
        return (sums.astype(np.int64) & 1).astype(np.uint8)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for c, sup in enumerate(self.col_supports):
            for r in sup:
                dense[r, c] = 1
        return dense

    def to_alist(self) -> str:
        """Serialize in the MacKay alist layout (1-based, zero-padded lists)."""
        col_w = [len(s) for s in self.col_supports]
        row_w = [len(s) for s in self.row_supports]
        max_cw = max(col_w, default=0)
        max_rw = max(row_w, default=0)
        lines = [
            f"{self.cols} {self.rows}",
            f"{max_cw} {max_rw}",
            " ".join(str(w) for w in col_w),
            " ".join(str(w) for w in row_w),
        ]
        for sup in self.col_supports:
            entries = [str(r + 1) for r in sup] + ["0"] * (max_cw - len(sup))
            lines.append(" ".join(entries))
        for sup in self.row_supports:
            entries = [str(c + 1) for c in sup] + ["0"] * (max_rw - len(sup))
            lines.append(" ".join(entries))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_alist(cls, text: str) -> "BinaryMatrix":
        """Parse alist text; strict about weights and index ranges."""
        try:
            tokens_per_line = [
                [int(tok) for tok in line.split()]
                for line in text.splitlines()
                if line.strip()
            ]
        except ValueError as exc:
            raise ValueError(f"alist: non-integer token ({exc})") from None
        if len(tokens_per_line) < 4:
            raise ValueError("alist: truncated header")
        if len(tokens_per_line[0]) != 2 or len(tokens_per_line[1]) != 2:
            raise ValueError("alist: malformed header")
        cols, rows = tokens_per_line[0]
        max_cw, max_rw = tokens_per_line[1]
        col_w = tokens_per_line[2]
        row_w = tokens_per_line[3]
        if len(col_w) != cols or len(row_w) != rows:
            raise ValueError("alist: weight line length mismatch")
        expected = 4 + cols + rows
        if len(tokens_per_line) != expected:
            raise ValueError(f"alist: expected {expected} lines, got {len(tokens_per_line)}")

        incidences = []
        for c in range(cols):
            entries = tokens_per_line[4 + c]
            nonzero = [e for e in entries if e != 0]
            if len(nonzero) != col_w[c]:
                raise ValueError(f"alist: column {c + 1} lists {len(nonzero)} entries, declared {col_w[c]}")
            for r in nonzero:
                if not (1 <= r <= rows):
                    raise ValueError(f"alist: column {c + 1} row index {r} out of range")
                incidences.append((r - 1, c))
        mat = cls.from_incidences(rows, cols, incidences)

        # Cross-check the redundant per-row lists against the column lists.
        for r in range(rows):
            entries = tokens_per_line[4 + cols + r]
            nonzero = sorted(e for e in entries if e != 0)
            if len(nonzero) != row_w[r]:
                raise ValueError(f"alist: row {r + 1} lists {len(nonzero)} entries, declared {row_w[r]}")
            if tuple(e - 1 for e in nonzero) != mat.row_supports[r]:
                raise ValueError(f"alist: row {r + 1} entries disagree with column lists")
        return mat
