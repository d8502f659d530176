"""Exact linear algebra over the rationals on numpy object arrays.

Entries are ``fractions.Fraction`` (or Python ints for the fraction-free
kernels); nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

import numpy as np


def fraction_matrix(rows: Sequence[Sequence], ncols: Optional[int] = None) -> np.ndarray:
    """Build an object-dtype matrix of Fractions; ``ncols`` fixes the width of an empty matrix."""
    if not rows:
        return np.empty((0, ncols or 0), dtype=object)
    matrix = np.empty((len(rows), len(rows[0])), dtype=object)
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            matrix[r, c] = Fraction(value)
    return matrix


def fraction_vector(values: Sequence) -> np.ndarray:
    vector = np.empty(len(values), dtype=object)
    for index, value in enumerate(values):
        vector[index] = Fraction(value)
    return vector


def _integer_rows(matrix: np.ndarray) -> List[List[int]]:
    """Scale each row by the lcm of its denominators."""
    result = []
    for row in matrix:
        scale = 1
        for value in row:
            scale = lcm(scale, Fraction(value).denominator)
        result.append([int(Fraction(value) * scale) for value in row])
    return result


def rank(matrix: np.ndarray) -> int:
    """Exact rank by Bareiss fraction-free elimination with column skipping."""
    if matrix.size == 0:
        return 0
    a = _integer_rows(matrix)
    n_rows, n_cols = len(a), len(a[0])
    previous = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if a[i][c]), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, n_rows):
            lead = a[i][c]
            row = a[i]
            base = a[r]
            # exact division: every 2x2 minor is a multiple of the previous pivot
            for j in range(c + 1, n_cols):
                row[j] = (pivot * row[j] - lead * base[j]) // previous
            row[c] = 0
        previous = pivot
        r += 1
    return r


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over Q and the pivot columns (left to right)."""
    m = matrix.copy()
    n_rows, n_cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if m[i, c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = m[r] / m[r, c]
        for i in range(n_rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def solve(matrix: np.ndarray, rhs: Sequence) -> Optional[List[Fraction]]:
    """A particular solution of matrix @ x = rhs (free variables set to 0), or None."""
    n_rows, n_cols = matrix.shape
    if n_rows == 0:
        return [Fraction(0)] * n_cols
    augmented = np.empty((n_rows, n_cols + 1), dtype=object)
    augmented[:, :n_cols] = matrix
    augmented[:, n_cols] = fraction_vector(rhs)
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == n_cols:
        return None
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r, n_cols]
    return solution


def nullspace(matrix: np.ndarray) -> List[List[Fraction]]:
    """A basis of the right kernel, one vector per free column."""
    n_rows, n_cols = matrix.shape
    if n_rows == 0:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * n_cols
        vector[free] = Fraction(1)
        for r, c in enumerate(pivots):
            vector[c] = -reduced[r, free]
        basis.append(vector)
    return basis


class EchelonSpan:
    """An incrementally grown subspace of Q^n kept in reduced echelon form."""

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: dict = {}

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence) -> np.ndarray:
        v = fraction_vector(vector)
        for c in sorted(self._rows):
            if v[c] != 0:
                v = v - v[c] * self._rows[c]
        return v

    def __contains__(self, vector) -> bool:
        return not any(value != 0 for value in self._reduce(vector))

    def add(self, vector: Sequence) -> bool:
        """Insert a vector; False when it already lies in the span."""
        v = self._reduce(vector)
        lead = next((c for c in range(self.dimension) if v[c] != 0), None)
        if lead is None:
            return False
        v = v / v[lead]
        for c, row in self._rows.items():
            if row[lead] != 0:
                self._rows[c] = row - row[lead] * v
        self._rows[lead] = v
        return True
