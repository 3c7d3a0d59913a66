"""
Stacky fans

A stacky fan is a simplicial fan on s rays together with B, the images of the
ray generators in N = Z^n + Z/a_1 + ... + Z/a_r. N is always presented as
Z^{n+r} / column-span(A) with A = [0; diag(a)], so B has n+r rows.
Cones are stored as tuples of 0-based ray indices; divisor names (D1, D2, ...)
and fan files use 1-based numbering.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

from src.algebra import determinant, identity, int_matrix
from src.errors import DimensionMismatchError, FanValidationError
from src.fans.presentation import normalize_presentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RayData:
    """Ray i (1-based): free projection of B column i equals b * v, v primitive."""

    index: int
    v: Tuple[int, ...]
    b: int


@dataclass(frozen=True, eq=False)
class StackyFan:
    """Immutable stacky fan data; build through make_fan to get validation."""

    n: int
    torsion: Tuple[int, ...]
    B: np.ndarray
    max_cones: Tuple[Tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.torsion)

    @property
    def s(self) -> int:
        return self.B.shape[1]

    @property
    def A(self) -> np.ndarray:
        """(n+r) x r matrix [0; diag(a)]."""
        A = np.zeros((self.n + self.r, self.r), dtype=object)
        for i, a in enumerate(self.torsion):
            A[self.n + i, i] = a
        return A

    @property
    def free_rows(self) -> np.ndarray:
        """Images of the rays in Z^n (the top n rows of B)."""
        return self.B[:self.n]

    @property
    def is_orbifold(self) -> bool:
        return self.r == 0

    def ray(self, i: int) -> Tuple[int, ...]:
        """Free projection of ray i (0-based)."""
        return tuple(int(x) for x in self.B[:self.n, i])

    def rays(self) -> List[RayData]:
        return [ray_data(self, i + 1) for i in range(self.s)]

    def contains_cone(self, tau: Sequence[int]) -> bool:
        tau = set(tau)
        return any(tau <= set(sigma) for sigma in self.max_cones)

    def to_dict(self) -> dict:
        """Fan-file representation (1-based cones)."""
        return {
            'rank': self.n,
            'torsion': list(self.torsion),
            'B': [[int(x) for x in row] for row in self.B],
            'cones': [[i + 1 for i in cone] for cone in self.max_cones],
        }


def _cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _half(u: Sequence[int]) -> int:
    return 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1


def _angle_cmp(u: Sequence[int], v: Sequence[int]) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = _cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def cyclic_ray_order(fan: StackyFan) -> List[int]:
    """0-based ray indices sorted counterclockwise by angle (n = 2)."""
    if fan.n != 2:
        raise DimensionMismatchError(f"cyclic order needs rank 2, got {fan.n}")
    return sorted(range(fan.s), key=functools.cmp_to_key(lambda i, j: _angle_cmp(fan.ray(i), fan.ray(j))))


def ray_data(fan: StackyFan, i: int) -> RayData:
    """
    Primitive generator and multiplicity of ray i.

    Args:
        fan: the stacky fan
        i: 1-based ray index

    Returns:
        RayData with b = content of the free projection
    """
    if not 1 <= i <= fan.s:
        raise IndexError(f"ray index {i} out of range 1..{fan.s}")
    w = fan.ray(i - 1)
    b = functools.reduce(gcd, w, 0)
    if b == 0:
        raise FanValidationError([f"ray {i} projects to zero in Z^{fan.n}"])
    return RayData(index=i, v=tuple(x // b for x in w), b=b)


def validate(fan: StackyFan) -> List[str]:
    """
    Collect every violated stacky-fan invariant.

    Returns:
        list of human-readable violations; empty when the fan is valid
    """
    violations: List[str] = []
    n, s = fan.n, fan.s

    if fan.B.shape[0] != n + fan.r:
        violations.append(f"B has {fan.B.shape[0]} rows, expected rank + torsion = {n + fan.r}")
        return violations
    for j, a in enumerate(fan.torsion):
        if a < 2:
            violations.append(f"torsion coefficient {j + 1} is {a}, must be >= 2")

    zero_rays = [i for i in range(s) if not any(fan.ray(i))]
    for i in zero_rays:
        violations.append(f"ray {i + 1} projects to zero in Z^{n}")

    seen = set()
    for c, cone in enumerate(fan.max_cones):
        label = f"cone {c + 1} {[i + 1 for i in cone]}"
        if any(not 0 <= i < s for i in cone):
            violations.append(f"{label}: ray index out of range 1..{s}")
            continue
        if len(set(cone)) != len(cone):
            violations.append(f"{label}: duplicate ray index")
            continue
        if len(cone) != n:
            violations.append(f"{label}: has {len(cone)} rays, expected {n}")
            continue
        key = frozenset(cone)
        if key in seen:
            violations.append(f"{label}: repeated cone")
        seen.add(key)
        if n and determinant(fan.free_rows[:, list(cone)]) == 0:
            violations.append(f"{label}: rays are linearly dependent (not simplicial)")

    if violations:
        return violations

    if n == 1:
        signs = [1 if fan.ray(i)[0] > 0 else -1 for i in range(s)]
        if sorted(signs) != [-1, 1]:
            violations.append(f"incomplete rank-1 fan: ray signs {signs}, expected one positive and one negative ray")
        elif seen != {frozenset([0]), frozenset([1])}:
            violations.append("incomplete rank-1 fan: both rays must be maximal cones")
    elif n == 2:
        violations.extend(_completeness_2d(fan, seen))
    elif n >= 3:
        logger.warning(f"completeness unchecked for rank {n} fan")
    return violations


def _completeness_2d(fan: StackyFan, cones: set) -> List[str]:
    problems = []
    order = cyclic_ray_order(fan)
    if fan.s < 3:
        return [f"incomplete rank-2 fan: only {fan.s} rays"]
    expected = set()
    for pos, i in enumerate(order):
        j = order[(pos + 1) % len(order)]
        u, v = fan.ray(i), fan.ray(j)
        c = _cross(u, v)
        if c == 0 and _half(u) == _half(v):
            problems.append(f"rays {i + 1} and {j + 1} span the same ray")
        elif c <= 0:
            problems.append(f"incomplete rank-2 fan: angle between rays {i + 1} and {j + 1} is at least pi")
        expected.add(frozenset([i, j]))
    if not problems and cones != expected:
        missing = sorted(sorted(k + 1 for k in c) for c in expected - cones)
        extra = sorted(sorted(k + 1 for k in c) for c in cones - expected)
        if missing:
            problems.append(f"incomplete rank-2 fan: missing cones {missing}")
        if extra:
            problems.append(f"cones {extra} are not between angularly adjacent rays")
    return problems


def make_fan(n: int, torsion: Sequence[int], B, max_cones: Sequence[Sequence[int]],
             check: bool = True) -> StackyFan:
    """
    Build a stacky fan from 0-based cones.

    Raises:
        FanValidationError: when check is set and validate reports violations
    """
    B = int_matrix(B, rows=n + len(torsion), cols=0)
    fan = StackyFan(
        n=int(n),
        torsion=tuple(int(a) for a in torsion),
        B=B,
        max_cones=tuple(tuple(int(i) for i in cone) for cone in max_cones),
    )
    if check:
        problems = validate(fan)
        if problems:
            raise FanValidationError(problems)
    return fan


def consecutive_cones(s: int) -> List[Tuple[int, int]]:
    """Cones {1,2}, {2,3}, ..., {s,1} as 0-based pairs."""
    return [(i, (i + 1) % s) for i in range(s)]


def fan_from_rays(rays: Sequence[Sequence[int]]) -> StackyFan:
    """Complete 2D orbifold fan on rays listed in counterclockwise order."""
    B = int_matrix(rays).T
    return make_fan(2, (), B, consecutive_cones(len(rays)))


def projective_line() -> StackyFan:
    return make_fan(1, (), [[1, -1]], [(0,), (1,)])


def projective_plane() -> StackyFan:
    return fan_from_rays([(1, 0), (0, 1), (-1, -1)])


def product_of_lines() -> StackyFan:
    """P^1 x P^1."""
    return fan_from_rays([(1, 0), (0, 1), (-1, 0), (0, -1)])


def hirzebruch(a: int) -> StackyFan:
    """Hirzebruch surface F_a."""
    if a < 0:
        raise ValueError(f"Hirzebruch parameter must be nonnegative, got {a}")
    return fan_from_rays([(1, 0), (0, 1), (-1, a), (0, -1)])


def weighted_projective(weights: Sequence[int]) -> StackyFan:
    """
    Weighted projective stack P(a_0, ..., a_n).

    N = Z^{n+1} / Z·a with B the identity, renormalized so that A = [0; diag].
    """
    weights = [int(w) for w in weights]
    if len(weights) < 2:
        raise ValueError("need at least two weights")
    if any(w < 1 for w in weights):
        raise ValueError(f"weights must be positive, got {weights}")
    size = len(weights)
    A = int_matrix([[w] for w in weights])
    n, torsion, B, _ = normalize_presentation(A, identity(size))
    cones = list(itertools.combinations(range(size), size - 1))
    logger.debug(f"P{tuple(weights)}: rank {n}, torsion {torsion}")
    return make_fan(n, torsion, B, cones)
