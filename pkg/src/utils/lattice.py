"""Integer grids shared by the push-forward and cohomology enumerations"""
import logging

import numpy as np

from src.config import Config
from src.errors import GridTooLargeError, IntegerRangeError

logger = logging.getLogger(__name__)

# headroom for one addition on top of a checked product
INT64_SAFE = 2 ** 61


def check_grid_size(points: int, what: str = 'grid'):
    """Refuse enumerations beyond Config.MAX_GRID_POINTS."""
    if points > Config.MAX_GRID_POINTS:
        raise GridTooLargeError(
            f"{what} has {points} points, above the limit of {Config.MAX_GRID_POINTS} "
            f"(raise TORIC_MAX_GRID_POINTS to allow it)")


def box_points(dim: int, low: int, high: int) -> np.ndarray:
    """
    All integer points of [low, high]^dim, one per row.

    Args:
        dim: dimension (0 gives the single empty point)
        low: lower bound, inclusive
        high: upper bound, inclusive

    Returns:
        int64 array of shape ((high - low + 1)^dim, dim)
    """
    side = high - low + 1
    check_grid_size(side ** dim, f"box [{low}, {high}]^{dim}")
    if dim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((side,) * dim, dtype=np.int64).reshape(dim, -1).T
    return grid + low


def unique_rows(rows: np.ndarray):
    """np.unique over rows that also copes with zero columns."""
    if rows.shape[1] == 0:
        return np.zeros((1 if len(rows) else 0, 0), dtype=rows.dtype), np.array([len(rows)] if len(rows) else [])
    return np.unique(rows, axis=0, return_counts=True)


def as_int64(values, what: str = 'vector') -> np.ndarray:
    """Exact integers as an int64 array, refusing entries beyond INT64_SAFE."""
    if isinstance(values, np.ndarray) and values.dtype == np.int64:
        return values
    values = np.asarray(values, dtype=object)
    if values.size and max(abs(int(x)) for x in values.flat) >= INT64_SAFE:
        raise IntegerRangeError(f"{what} has entries of magnitude 2^61 or more")
    return values.astype(np.int64)


def exact_matmul(left: np.ndarray, right, what: str = 'product') -> np.ndarray:
    """
    left @ right in int64 once every entry of the result is known to fit.

    Args:
        left: int64 batch, one vector per row
        right: exact integer matrix (object dtype is fine)
        what: label for the error message

    Returns:
        int64 array of shape (len(left), right.shape[1])
    """
    right = np.asarray(right, dtype=object)
    left_max = int(np.abs(left).max()) if left.size else 0
    column_sums = [sum(abs(int(x)) for x in right[:, j]) for j in range(right.shape[1])]
    bound = left_max * max(column_sums, default=0)
    if bound >= INT64_SAFE:
        logger.debug(f"{what}: entry bound {bound} exceeds the int64 range")
        raise IntegerRangeError(f"{what} could overflow int64 (entries up to {bound})")
    return left @ right.astype(np.int64)
