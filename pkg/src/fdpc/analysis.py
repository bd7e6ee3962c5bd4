"""Structural analysis: ring graphs, girth, 4-cycle census, minimum distance.

Base matrices have weight-2 columns, so each column is an edge between its
two support rows; cycles in that graph correspond to low-weight codewords
of the base code.  Vertices are reported 1-based to match the matrix row
numbering used everywhere user-facing.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from .matrix import BinaryMatrix


@dataclass(frozen=True)
class RingGraph:
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]  # (u, v) with u < v, 1-based, one per column


def ring_graph(base: BinaryMatrix) -> RingGraph:
    """Graph with one vertex per row and one edge per weight-2 column."""
    edges = []
    for c, sup in enumerate(base.col_supports):
        if len(sup) != 2:
            raise ValueError(f"column {c + 1} has weight {len(sup)}, need exactly 2")
        edges.append((sup[0] + 1, sup[1] + 1))
    return RingGraph(vertex_count=base.rows, edges=tuple(edges))


def girth(g: RingGraph):
    """Length of the shortest cycle, or None if the graph is acyclic.

    Parallel edges count as a 2-cycle.  BFS from every vertex; the first
    non-tree edge seen closes a candidate cycle, and the minimum over all
    starts is exact.
    """
    if not g.edges:
        return None
    if len(set(g.edges)) < len(g.edges):
        return 2
    adj = {v: [] for v in range(1, g.vertex_count + 1)}
    for ei, (u, v) in enumerate(g.edges):
        adj[u].append((v, ei))
        adj[v].append((u, ei))
    best = math.inf
    for start in range(1, g.vertex_count + 1):
        dist = {start: 0}
        via = {start: -1}  # edge index used to reach the vertex
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, ei in adj[u]:
                if ei == via[u]:
                    continue
                if v not in dist:
                    dist[v] = dist[u] + 1
                    via[v] = ei
                    queue.append(v)
                else:
                    best = min(best, dist[u] + dist[v] + 1)
        if best == 3:
            break
    return None if best is math.inf else int(best)


def count_4cycles(g: RingGraph) -> int:
    """Exact number of distinct 4-cycles (each counted once).

    A 4-cycle is fixed by an opposite vertex pair and a 2-subset of their
    common neighbours; every 4-cycle has two opposite pairs.
    """
    n = g.vertex_count
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        adj[u - 1, v - 1] = 1
        adj[v - 1, u - 1] = 1
    codeg = adj @ adj
    total = 0
    for u in range(n):
        for v in range(u + 1, n):
            c = int(codeg[u, v])
            total += c * (c - 1) // 2
    return total // 2


def gf2_row_reduce(row_masks, cols: int):
    """In-place RREF of bitmask rows; returns (rank, pivot column list)."""
    pivots = []
    r = 0
    for col in range(cols):
        bit = 1 << col
        pivot = next((i for i in range(r, len(row_masks)) if row_masks[i] & bit), None)
        if pivot is None:
            continue
        row_masks[r], row_masks[pivot] = row_masks[pivot], row_masks[r]
        for i in range(len(row_masks)):
            if i != r and (row_masks[i] & bit):
                row_masks[i] ^= row_masks[r]
        pivots.append(col)
        r += 1
    return r, pivots


def gf2_nullspace(h: BinaryMatrix):
    """Basis of {x : Hx = 0} as column bitmasks (bit j = column j)."""
    rows = []
    for sup in h.row_supports:
        mask = 0
        for c in sup:
            mask |= 1 << c
        rows.append(mask)
    rank, pivots = gf2_row_reduce(rows, h.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(h.cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for i, pcol in enumerate(pivots):
            if rows[i] & (1 << free):
                vec |= 1 << pcol
        basis.append(vec)
    return basis


def min_distance_enumerate(h: BinaryMatrix, max_dim: int = 20):
    """Exhaustive minimum distance and weight spectrum of the code ker(H).

    Enumerates all 2^dim codewords from a nullspace basis, so the nullspace
    dimension must not exceed max_dim.  Returns (d_min, weight_counts);
    d_min is math.inf when the only codeword is zero.
    """
    basis = gf2_nullspace(h)
    dim = len(basis)
    if dim > max_dim:
        raise ValueError(f"nullspace dimension {dim} exceeds max_dim {max_dim}")
    counts: Dict[int, int] = Counter()
    if dim == 0:
        return math.inf, dict(counts)
    if h.cols <= 63:
        words = np.zeros(1, dtype=np.uint64)
        for b in basis:
            words = np.concatenate([words, words ^ np.uint64(b)])
        weights = np.bitwise_count(words[1:])
        hist = np.bincount(weights.astype(np.int64))
        for w, c in enumerate(hist):
            if w > 0 and c > 0:
                counts[w] = int(c)
    else:
        # Gray-code walk: flip one basis vector per step.
        word = 0
        for i in range(1, 1 << dim):
            word ^= basis[(i & -i).bit_length() - 1]
            counts[word.bit_count()] += 1
    d_min = min(counts)
    return d_min, dict(sorted(counts.items()))


def density(h: BinaryMatrix) -> Fraction:
    """Fraction of entries equal to 1, as an exact rational."""
    return Fraction(h.num_ones, h.rows * h.cols)


def weight_histograms(h: BinaryMatrix):
    """(row_weight -> count, col_weight -> count) histograms."""
    row_hist = Counter(len(s) for s in h.row_supports)
    col_hist = Counter(len(s) for s in h.col_supports)
    return dict(sorted(row_hist.items())), dict(sorted(col_hist.items()))
