"""
Nefness through the support function on the coarse fan, and the K-group rank
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, NamedTuple, Sequence, Tuple

import numpy as np
from scipy.spatial import ConvexHull

from src.errors import DimensionMismatchError, ToricError, UnsupportedFanError
from src.fans.picard import LineBundle
from src.fans.stackyfan import StackyFan, ray_data
from src.frobenius.pushforward import stable_summands

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SupportFunction:
    """Linear form m_sigma on each maximal cone with <m_sigma, v_i> = -k_i/b_i."""

    forms: Dict[Tuple[int, ...], Tuple[Fraction, Fraction]]
    values: Tuple[Fraction, ...]

    def is_convex(self, fan: StackyFan) -> bool:
        for m in self.forms.values():
            for t in range(fan.s):
                v = ray_data(fan, t + 1).v
                if m[0] * v[0] + m[1] * v[1] < self.values[t]:
                    return False
        return True


def support_function(fan: StackyFan, k: Sequence[int]) -> SupportFunction:
    if fan.n != 2:
        raise UnsupportedFanError(f"nefness is only implemented for rank 2, got {fan.n}")
    if len(k) != fan.s:
        raise DimensionMismatchError(f"k has length {len(k)}, fan has {fan.s} rays")
    rays = fan.rays()
    values = tuple(Fraction(-int(x), rd.b) for x, rd in zip(k, rays))
    forms = {}
    for cone in fan.max_cones:
        i, j = cone
        (a, b), (c, d) = rays[i].v, rays[j].v
        det = a * d - b * c
        if det == 0:
            raise ToricError(f"cone {[i + 1, j + 1]} is not full-dimensional")
        forms[cone] = ((values[i] * d - b * values[j]) / det, (a * values[j] - values[i] * c) / det)
    return SupportFunction(forms=forms, values=values)


def is_nef_divisor(fan: StackyFan, k: Sequence[int]) -> bool:
    """Whether sum (k_i/b_i) D_i is nef on the coarse surface."""
    return support_function(fan, k).is_convex(fan)


def is_nef(fan: StackyFan, L: LineBundle) -> bool:
    """
    Whether L = O(kD) is nef.

    Args:
        fan: complete stacky fan of rank 2
        L: line bundle whose canonical representative has zero twist

    Returns:
        True iff the support function is convex
    """
    if any(L.l):
        raise ToricError(f"nefness needs a representative with zero torsion twist, got {L}")
    return is_nef_divisor(fan, L.k)


def nef_summands(fan: StackyFan) -> FrozenSet[LineBundle]:
    """Stable summands O(D) with -D nef."""
    kept = set()
    for L in stable_summands(fan):
        if any(L.l):
            logger.warning(f"{L} has no untwisted representative; left out of the nef summands")
            continue
        if is_nef(fan, -L):
            kept.add(L)
        else:
            logger.debug(f"{L}: negation is not nef")
    return frozenset(kept)


class HullRank(NamedTuple):
    rank: int
    on_boundary: bool


def _cross(o, p, q) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _on_segment(p, q, x) -> bool:
    return (_cross(p, q, x) == 0
            and min(p[0], q[0]) <= x[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= x[1] <= max(p[1], q[1]))


def k_rank(fan: StackyFan) -> HullRank:
    """
    2! times the area of the convex hull of the ray images.

    The rank formula for K applies when every ray image lies on the hull
    boundary; on_boundary reports that.
    """
    if fan.n != 2:
        raise UnsupportedFanError(f"hull volume is only implemented for rank 2, got {fan.n}")
    points = [fan.ray(i) for i in range(fan.s)]
    hull = ConvexHull(np.array(points, dtype=float))
    vertices = [points[i] for i in hull.vertices]

    twice_area = 0
    for p, q in zip(vertices, vertices[1:] + vertices[:1]):
        twice_area += p[0] * q[1] - p[1] * q[0]
    twice_area = abs(twice_area)
    # n! vol with n = 2 is exactly twice the area, an integer for lattice polygons
    if Fraction(twice_area).denominator != 1:
        raise ToricError(f"2! vol = {twice_area} is not an integer")

    edges = list(zip(vertices, vertices[1:] + vertices[:1]))
    on_boundary = all(any(_on_segment(p, q, x) for p, q in edges) for x in points)
    logger.debug(f"hull with {len(vertices)} vertices, 2 vol = {twice_area}, boundary = {on_boundary}")
    return HullRank(rank=int(twice_area), on_boundary=on_boundary)
