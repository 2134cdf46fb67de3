"""Sparse linear algebra over F2.

Matrices are sets of (row, col) positions; elimination runs on rows packed
64 columns to a machine word, so the inner loop is a vectorized xor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch


@dataclass
class SparseF2Matrix:
    rows: int
    cols: int
    entries: set = field(default_factory=set)

    def __post_init__(self):
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise DimensionMismatch(f"entry {(r, c)} outside {self.rows}x{self.cols}")

    def transpose(self):
        return SparseF2Matrix(self.cols, self.rows, {(c, r) for r, c in self.entries})

    def to_coord_text(self):
        """Debug dump: one 'row col' pair per line, 1-based, sorted."""
        return "\n".join(f"{r + 1} {c + 1}" for r, c in sorted(self.entries))


def _pack(rows, cols, entries, extra_cols=0):
    words = (cols + extra_cols + 63) // 64
    packed = np.zeros((rows, max(words, 1)), dtype=np.uint64)
    for r, c in entries:
        packed[r, c >> 6] |= np.uint64(1) << np.uint64(c & 63)
    return packed


def _eliminate(packed, cols):
    """In-place reduction to reduced row echelon form.

    Returns the list of (pivot_row, pivot_col) pairs; len() of it is the rank.
    """
    nrows = packed.shape[0]
    pivots = []
    row = 0
    for col in range(cols):
        if row == nrows:
            break
        w = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        hits = np.nonzero(packed[row:, w] & bit)[0]
        if hits.size == 0:
            continue
        p = row + hits[0]
        if p != row:
            packed[[row, p]] = packed[[p, row]]
        mask = (packed[:, w] & bit).astype(bool)
        mask[row] = False
        if mask.any():
            packed[mask] ^= packed[row]
        pivots.append((row, col))
        row += 1
    return pivots


def f2_rank(matrix):
    """Rank over F2 by Gaussian elimination on packed rows."""
    if not matrix.entries:
        return 0
    # Eliminating along the smaller dimension is cheaper; rank is symmetric.
    m = matrix if matrix.rows <= matrix.cols else matrix.transpose()
    packed = _pack(m.rows, m.cols, m.entries)
    return len(_eliminate(packed, m.cols))


def rank_from_entries(rows, cols, entries):
    """f2_rank without building the dataclass; entries is any iterable."""
    entries = list(entries)
    if not entries:
        return 0
    if rows <= cols:
        packed = _pack(rows, cols, entries)
        return len(_eliminate(packed, cols))
    packed = _pack(cols, rows, [(c, r) for r, c in entries])
    return len(_eliminate(packed, rows))


def f2_solve(matrix, b):
    """Any solution x of matrix @ x = b over F2, or None if b is not in the span.

    ``b`` is an iterable of 0/1 of length ``matrix.rows``; the result is a
    list of 0/1 of length ``matrix.cols``.
    """
    b = list(b)
    if len(b) != matrix.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != rows {matrix.rows}")
    cols = matrix.cols
    entries = set(matrix.entries)
    for r, bit in enumerate(b):
        if bit & 1:
            entries.add((r, cols))  # augmented column
    packed = _pack(matrix.rows, cols + 1, entries)
    pivots = _eliminate(packed, cols)
    # A leftover 1 in the augmented column of a zero row means no solution.
    bcol_w = cols >> 6
    bcol_bit = np.uint64(1) << np.uint64(cols & 63)
    nrows = matrix.rows
    first_free = pivots[-1][0] + 1 if pivots else 0
    for r in range(first_free, nrows):
        if packed[r, bcol_w] & bcol_bit:
            return None
    x = [0] * cols
    for row, col in pivots:
        if packed[row, bcol_w] & bcol_bit:
            x[col] = 1
    return x
