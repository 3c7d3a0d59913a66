"""
Cohomology of line bundles on complete toric orbifolds of rank <= 2

H^0 is a monomial count. All H^p come from the coset formula
    h^p(O(kD)) = sum over m in Z^n of h~_{n-p-1}(Supp(k + tB·m)),
evaluated on a box around the origin. A lattice point contributes only when
Supp is empty, full, or disconnected, and each of those sign patterns cuts out
a bounded polygon whose vertices are intersections of the lines
<m, beta_i> = -k_i and <m, beta_i> = -k_i - 1. The box radius is doubled
until it covers all such vertices and its outer shell contributes nothing.
"""
import functools
import itertools
import logging
import math
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError, FanValidationError, ToricError, UnsupportedFanError
from src.fans.picard import LineBundle
from src.fans.stackyfan import StackyFan, validate
from src.cohomology.supp import reduced_homology_dims, require_surface_orbifold, supp_complex
from src.utils.lattice import as_int64, box_points, exact_matmul
from src.utils.retry import BoundNotCertified, doubling_radius

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def _require_complete(fan: StackyFan):
    require_surface_orbifold(fan)
    violations = validate(fan)
    if violations:
        raise FanValidationError(violations)


def _pairings(fan: StackyFan, P: np.ndarray) -> np.ndarray:
    """Row p of the result holds <p, beta(f_i)> for every ray i."""
    return exact_matmul(P, np.asarray(fan.B, dtype=object).reshape(fan.n, fan.s), "pairings with the rays")


def _vertex_bound(fan: StackyFan, offsets: Sequence[Sequence[int]]) -> int:
    """
    Largest |coordinate| among points where the lines <m, beta_i> = c meet.

    Args:
        fan: complete orbifold of rank 1 or 2
        offsets: for each ray, the right-hand sides c to intersect

    Returns:
        nonnegative integer radius
    """
    rays = [fan.ray(i) for i in range(fan.s)]
    bound = Fraction(0)
    if fan.n == 1:
        for (b,), cs in zip(rays, offsets):
            bound = max([bound] + [abs(Fraction(c, b)) for c in cs])
        return math.ceil(bound)
    for i, j in itertools.combinations(range(fan.s), 2):
        (a, b), (c, d) = rays[i], rays[j]
        det = a * d - b * c
        if det == 0:
            continue
        for ci, cj in itertools.product(offsets[i], offsets[j]):
            x = Fraction(ci * d - b * cj, det)
            y = Fraction(a * cj - ci * c, det)
            bound = max(bound, abs(x), abs(y))
    return math.ceil(bound)


def _divisor_vector(fan: StackyFan, k: Sequence[int]) -> np.ndarray:
    if len(k) != fan.s:
        raise DimensionMismatchError(f"k has length {len(k)}, fan has {fan.s} rays")
    return as_int64([int(x) for x in k], "divisor")


def count_sections(fan: StackyFan, k: Sequence[int]) -> int:
    """Lattice points m with k_i + <m, beta_i> >= 0 for every ray."""
    _require_complete(fan)
    k = _divisor_vector(fan, k)
    if fan.n == 0:
        return 1
    radius = _vertex_bound(fan, [(-int(x),) for x in k])
    P = box_points(fan.n, -radius, radius)
    return int(np.all(k + _pairings(fan, P) >= 0, axis=1).sum())


def h0(fan: StackyFan, L: LineBundle) -> int:
    """dim H^0(L) by counting monomials."""
    if L.fan is not fan:
        raise ToricError("line bundle does not live on the given fan")
    return count_sections(fan, L.k)


@doubling_radius()
def _coset_sum(fan: StackyFan, k: np.ndarray, bound: int, *, radius: int) -> Tuple[int, ...]:
    P = box_points(fan.n, -radius, radius)
    masks = (k + _pairings(fan, P)) >= 0
    patterns, inverse = np.unique(masks, axis=0, return_inverse=True)
    dims = np.array([
        reduced_homology_dims(supp_complex(fan, [0 if x else -1 for x in row]))
        for row in patterns
    ], dtype=np.int64)
    contributions = dims[inverse.reshape(-1)]

    shell = np.abs(P).max(axis=1) == radius
    if radius < bound:
        raise BoundNotCertified(f"radius below vertex bound {bound}")
    if contributions[shell].any():
        raise BoundNotCertified("outer shell contributes")

    totals = contributions.sum(axis=0)
    logger.debug(f"coset sum over {len(P)} points at radius {radius}: {len(patterns)} sign patterns")
    # dims are (h~_-1, h~_0, h~_1) so h~_{n-p-1} sits at index n - p
    return tuple(int(totals[fan.n - p]) for p in range(fan.n + 1))


def cohomology_of_divisor(fan: StackyFan, k: Sequence[int]) -> Tuple[int, ...]:
    """(h^0, ..., h^n) of O(kD) for an explicit divisor vector k."""
    _require_complete(fan)
    k = _divisor_vector(fan, k)
    if fan.n == 0:
        return (1,)
    bound = _vertex_bound(fan, [(-int(x), -int(x) - 1) for x in k])
    start = int(np.abs(k).max(initial=0)) + max(sum(abs(c) for c in fan.ray(i)) for i in range(fan.s)) + 1
    logger.debug(f"cohomology of O({list(map(int, k))} D): vertex bound {bound}, starting radius {start}")
    return _coset_sum(fan, k, bound, radius=start)


def h_all(fan: StackyFan, L: LineBundle) -> Tuple[int, ...]:
    """(h^0, ..., h^n) of a line bundle."""
    if L.fan is not fan:
        raise ToricError("line bundle does not live on the given fan")
    if fan.r:
        raise UnsupportedFanError(f"needs an orbifold (no torsion), got torsion {fan.torsion}")
    return cohomology_of_divisor(fan, L.k)


def ext(fan: StackyFan, L1: LineBundle, L2: LineBundle) -> Tuple[int, ...]:
    """Ext^*(L1, L2) = H^*(L2 - L1)."""
    return h_all(fan, L2 - L1)
