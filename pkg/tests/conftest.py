"""Shared fixtures: named fans and a seeded random-fan factory"""
import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from src.errors import FanValidationError  # noqa: E402
from src.fans import fan_from_rays, make_fan, projective_line, projective_plane  # noqa: E402


@pytest.fixture
def p1():
    return projective_line()


@pytest.fixture
def p2():
    return projective_plane()


@pytest.fixture
def ex2_fan():
    return fan_from_rays([(1, 0), (0, 1), (-2, 2), (0, -1)])


@pytest.fixture
def ex3_fan():
    return fan_from_rays([(1, 0), (0, 1), (-2, 2), (-1, 0), (0, -1)])


def random_complete_rays(rng, max_rays=5, bound=3):
    """Nonzero integer vectors in counterclockwise order spanning a complete fan."""
    while True:
        count = int(rng.integers(3, max_rays + 1))
        vectors = [tuple(int(x) for x in rng.integers(-bound, bound + 1, size=2)) for _ in range(count)]
        if any(v == (0, 0) for v in vectors):
            continue
        angles = [math.atan2(v[1], v[0]) for v in vectors]
        if len({round(a, 9) for a in angles}) != count:
            continue
        ordered = [v for _, v in sorted(zip(angles, vectors))]
        sorted_angles = sorted(angles)
        gaps = [b - a for a, b in zip(sorted_angles, sorted_angles[1:])]
        gaps.append(sorted_angles[0] + 2 * math.pi - sorted_angles[-1])
        if max(gaps) < math.pi - 1e-9:
            return ordered


def random_orbifold(rng, max_rays=5, bound=3):
    """Random complete 2D orbifold fan."""
    while True:
        try:
            return fan_from_rays(random_complete_rays(rng, max_rays, bound))
        except FanValidationError:
            continue


def random_stacky_fan(rng):
    """Random valid fan with rank <= 2, at most one torsion factor and at most 5 rays."""
    while True:
        rank = int(rng.integers(1, 3))
        torsion = () if rng.random() < 0.5 else (int(rng.integers(2, 4)),)
        if rank == 1:
            B = [[int(rng.integers(1, 4)), -int(rng.integers(1, 4))]]
            cones = [(0,), (1,)]
        else:
            rays = random_complete_rays(rng)
            B = [[v[0] for v in rays], [v[1] for v in rays]]
            cones = [(i, (i + 1) % len(rays)) for i in range(len(rays))]
        s = len(B[0])
        if torsion:
            B.append([int(x) for x in rng.integers(0, torsion[0], size=s)])
        try:
            return make_fan(rank, torsion, B, cones)
        except FanValidationError:
            continue


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def orbifold_factory(rng):
    return lambda: random_orbifold(rng)


@pytest.fixture
def stacky_fan_factory(rng):
    return lambda: random_stacky_fan(rng)
