"""
Exact integer normal forms

Smith and Hermite normal forms over numpy object arrays, so every entry is a
Python int and nothing can overflow or round.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


def int_matrix(data, rows: Optional[int] = None, cols: Optional[int] = None) -> np.ndarray:
    """
    Build an exact integer matrix (numpy object array of Python ints).

    Args:
        data: nested sequence or array of integers
        rows: row count, required when data is empty
        cols: column count, required when data is empty

    Returns:
        2-D object array
    """
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        r = rows if rows is not None else (arr.shape[0] if arr.ndim >= 1 else 0)
        c = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
        return np.zeros((r, c), dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    out = np.empty(arr.shape, dtype=object)
    for idx, value in np.ndenumerate(arr):
        out[idx] = int(value)
    return out


def int_vector(data) -> np.ndarray:
    """1-D exact integer vector."""
    values = [int(x) for x in data]
    out = np.empty(len(values), dtype=object)
    out[:] = values
    return out


def identity(size: int) -> np.ndarray:
    """Exact identity matrix."""
    out = np.zeros((size, size), dtype=object)
    for i in range(size):
        out[i, i] = 1
    return out


def determinant(M: np.ndarray) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    A = int_matrix(M)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"determinant needs a square matrix, got {A.shape}")
    if n == 0:
        return 1
    A = A.copy()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i, k] != 0), None)
            if swap is None:
                return 0
            A[[k, swap]] = A[[swap, k]]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i, j] = (A[i, j] * A[k, k] - A[i, k] * A[k, j]) // prev
        prev = A[k, k]
    return sign * A[n - 1, n - 1]


class _Reducer:
    """Row/column operations on S that keep U·M·V = S and the inverses in sync."""

    def __init__(self, M: np.ndarray):
        self.S = int_matrix(M).copy()
        rows, cols = self.S.shape
        self.U, self.Uinv = identity(rows), identity(rows)
        self.V, self.Vinv = identity(cols), identity(cols)

    def add_row(self, i: int, k: int, q: int):
        # row_i += q * row_k
        self.S[i] += q * self.S[k]
        self.U[i] += q * self.U[k]
        self.Uinv[:, k] -= q * self.Uinv[:, i]

    def swap_rows(self, i: int, k: int):
        if i == k:
            return
        self.S[[i, k]] = self.S[[k, i]]
        self.U[[i, k]] = self.U[[k, i]]
        self.Uinv[:, [i, k]] = self.Uinv[:, [k, i]]

    def negate_row(self, i: int):
        self.S[i] = -self.S[i]
        self.U[i] = -self.U[i]
        self.Uinv[:, i] = -self.Uinv[:, i]

    def add_col(self, j: int, k: int, q: int):
        # col_j += q * col_k
        self.S[:, j] += q * self.S[:, k]
        self.V[:, j] += q * self.V[:, k]
        self.Vinv[k] -= q * self.Vinv[j]

    def swap_cols(self, j: int, k: int):
        if j == k:
            return
        self.S[:, [j, k]] = self.S[:, [k, j]]
        self.V[:, [j, k]] = self.V[:, [k, j]]
        self.Vinv[[j, k]] = self.Vinv[[k, j]]


def _smallest_entry(S: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    best = None
    rows, cols = S.shape
    for i in range(t, rows):
        for j in range(t, cols):
            if S[i, j] != 0 and (best is None or abs(S[i, j]) < abs(S[best])):
                best = (i, j)
    return best


def smith_normal_form(M, return_inverses: bool = False) -> Tuple[np.ndarray, ...]:
    """
    Smith normal form by elementary reduction with minimal-absolute-value pivots.

    Args:
        M: integer matrix (any shape, including zero-dimensional)
        return_inverses: also return U^-1 and V^-1

    Returns:
        (U, S, V) or (U, S, V, Uinv, Vinv) with U·M·V = S, U and V unimodular,
        and S diagonal with d_1 | d_2 | ... and nonnegative entries
    """
    red = _Reducer(M)
    S = red.S
    rows, cols = S.shape

    for t in range(min(rows, cols)):
        pivot = _smallest_entry(S, t)
        if pivot is None:
            break
        red.swap_rows(t, pivot[0])
        red.swap_cols(t, pivot[1])

        while True:
            for i in range(t + 1, rows):
                q = S[i, t] // S[t, t]
                if q:
                    red.add_row(i, t, -q)
            for j in range(t + 1, cols):
                q = S[t, j] // S[t, t]
                if q:
                    red.add_col(j, t, -q)

            leftovers = [(i, t) for i in range(t + 1, rows) if S[i, t] != 0]
            leftovers += [(t, j) for j in range(t + 1, cols) if S[t, j] != 0]
            if leftovers:
                i, j = min(leftovers, key=lambda ij: abs(S[ij]))
                red.swap_rows(t, i)
                red.swap_cols(t, j)
                continue

            # divisibility chain: fold an offending row into the pivot row
            offender = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                 if S[i, j] % S[t, t] != 0),
                None,
            )
            if offender is None:
                break
            red.add_row(t, offender[0], 1)

        if S[t, t] < 0:
            red.negate_row(t)

    if return_inverses:
        return red.U, red.S, red.V, red.Uinv, red.Vinv
    return red.U, red.S, red.V


def diagonal(S: np.ndarray) -> List[int]:
    """Diagonal entries of a (possibly rectangular) matrix."""
    return [int(S[i, i]) for i in range(min(S.shape))]


def rank(M) -> int:
    """Rank over the rationals."""
    _, S, _ = smith_normal_form(M)
    return sum(1 for d in diagonal(S) if d != 0)


def solve_integer(M, b: Sequence[int]) -> Optional[np.ndarray]:
    """
    Solve M·x = b over the integers.

    Args:
        M: integer matrix
        b: right-hand side, length M.rows

    Returns:
        the SNF-reduced particular solution, or None when no integer solution exists
    """
    M = int_matrix(M)
    rows, cols = M.shape
    if len(b) != rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {rows}")
    U, S, V = smith_normal_form(M)
    c = U.dot(int_vector(b)) if rows else int_vector([])
    y = int_vector([0] * cols)
    for i in range(rows):
        d = S[i, i] if i < cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d != 0:
            return None
        else:
            y[i] = c[i] // d
    return V.dot(y) if cols else y


def hermite_normal_form(R) -> Tuple[np.ndarray, List[int]]:
    """
    Row-style Hermite normal form of the lattice spanned by the rows of R.

    Returns:
        (H, pivots): H has independent rows in echelon form, each pivot positive
        and every entry above a pivot reduced into [0, pivot); pivots lists
        the pivot column of each row
    """
    H = int_matrix(R).copy()
    nrows, ncols = H.shape
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        while True:
            nonzero = [i for i in range(row, nrows) if H[i, col] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: abs(H[i, col]))
            H[[row, p]] = H[[p, row]]
            for i in range(row + 1, nrows):
                if H[i, col] != 0:
                    H[i] -= (H[i, col] // H[row, col]) * H[row]
            if all(H[i, col] == 0 for i in range(row + 1, nrows)):
                break
        if H[row, col] == 0:
            continue
        if H[row, col] < 0:
            H[row] = -H[row]
        for i in range(row):
            H[i] -= (H[i, col] // H[row, col]) * H[row]
        pivots.append(col)
        row += 1
    return H[:row], pivots


def reduce_by_hermite(v: Sequence[int], H: np.ndarray, pivots: Sequence[int]) -> np.ndarray:
    """Unique coset representative of v modulo the row lattice of H."""
    out = int_vector(v)
    for row, col in enumerate(pivots):
        q = out[col] // H[row, col]
        if q:
            out = out - q * H[row]
    return out


def matmul(X, Y) -> np.ndarray:
    """Exact product that also handles zero-size dimensions."""
    X = int_matrix(X) if np.ndim(X) == 2 else X
    Y = int_matrix(Y) if np.ndim(Y) == 2 else Y
    if X.shape[-1] == 0 or X.size == 0 or Y.size == 0:
        shape = X.shape[:-1] + Y.shape[1:]
        return np.zeros(shape, dtype=object)
    return X.dot(Y)
