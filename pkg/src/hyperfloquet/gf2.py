"""GF(2) linear algebra on integer bitsets.

Rows are Python ints; bit j of a row is the entry in column j. All
routines are exact and deterministic (pivoting scans columns in
increasing order).
"""

from __future__ import annotations

from typing import List, Sequence, Tuple


def rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank of the row set over GF(2)."""
    work = [r for r in rows if r]
    rk = 0
    for col in range(n_cols):
        pivot = None
        for i in range(rk, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for i in range(len(work)):
            if i != rk and (work[i] >> col) & 1:
                work[i] ^= work[rk]
        rk += 1
        if rk == len(work):
            break
    return rk


def row_reduce(rows: Sequence[int], n_cols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_cols); reduced_rows[i] has its pivot at
    pivot_cols[i] and zeros in every other pivot column.
    """
    work = [r for r in rows if r]
    pivots: List[int] = []
    rk = 0
    for col in range(n_cols):
        pivot = None
        for i in range(rk, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for i in range(len(work)):
            if i != rk and (work[i] >> col) & 1:
                work[i] ^= work[rk]
        pivots.append(col)
        rk += 1
    return work[:rk], pivots


def nullspace(rows: Sequence[int], n_cols: int) -> List[int]:
    """Basis of {x : row . x = 0 mod 2 for every row}."""
    reduced, pivots = row_reduce(rows, n_cols)
    pivot_set = set(pivots)
    basis = []
    for col in range(n_cols):
        if col in pivot_set:
            continue
        vec = 1 << col
        for i, pc in enumerate(pivots):
            if (reduced[i] >> col) & 1:
                vec |= 1 << pc
        basis.append(vec)
    return basis


def in_rowspan(vec: int, rows: Sequence[int], n_cols: int) -> bool:
    """Whether vec lies in the GF(2) span of rows."""
    base = rank(rows, n_cols)
    return rank(list(rows) + [vec], n_cols) == base


class Eliminator:
    """Incremental independent-set builder over GF(2) (XOR basis).

    Rows are stored keyed by pivot column (lowest set bit). add()
    returns True when the vector enlarges the span, False when it was
    already dependent.
    """

    def __init__(self, n_cols: int):
        self.n_cols = n_cols
        self._pivot_rows: dict[int, int] = {}

    def reduce(self, vec: int) -> int:
        while vec:
            col = (vec & -vec).bit_length() - 1
            row = self._pivot_rows.get(col)
            if row is None:
                return vec
            vec ^= row
        return 0

    def contains(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    def add(self, vec: int) -> bool:
        vec = self.reduce(vec)
        if vec == 0:
            return False
        col = (vec & -vec).bit_length() - 1
        self._pivot_rows[col] = vec
        return True

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)
