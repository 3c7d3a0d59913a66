"""
Weighted blow-ups and resolution of 2-dimensional toric orbifolds
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

import numpy as np

from src.algebra import identity
from src.errors import ToricError, UnsupportedFanError
from src.fans.stackyfan import StackyFan, make_fan, ray_data
from src.constructions.morphisms import ToricMorphism, cone_coordinates, make_morphism

logger = logging.getLogger(__name__)

MAX_RESOLUTION_STEPS = 10_000


@dataclass(frozen=True, eq=False)
class BlowupStep:
    """One star subdivision: the new fan, its morphism down, and the recipe used."""

    fan: StackyFan
    morphism: ToricMorphism
    cone: Tuple[int, int]
    v_new: Tuple[int, int]
    b_new: int
    c: Tuple[int, int]


def _require_2d_orbifold(fan: StackyFan):
    if fan.n != 2 or fan.r != 0:
        raise UnsupportedFanError(f"needs a 2-dimensional orbifold, got rank {fan.n} with torsion {fan.torsion}")


def weighted_blowup(fan: StackyFan, sigma: Sequence[int], v_new: Sequence[int]) -> BlowupStep:
    """
    Star subdivision of the 2-cone sigma at v_new.

    With m·v_new = h_1 v_1 + h_2 v_2 (h_i coprime) and h the least positive
    integer making every h·h_i/b_i integral, the new ray gets multiplicity
    b_new = h·m and f'_new maps to sum c_i f_i with c_i = h·h_i/b_i.

    Args:
        fan: 2-dimensional orbifold
        sigma: maximal cone as 0-based ray indices
        v_new: primitive vector in the interior of sigma

    Returns:
        BlowupStep with the subdivided fan and the blow-down morphism
    """
    _require_2d_orbifold(fan)
    sigma = tuple(int(i) for i in sigma)
    if not any(set(sigma) == set(cone) for cone in fan.max_cones) or len(sigma) != 2:
        raise ToricError(f"cone {[i + 1 for i in sigma]} is not a maximal cone")
    v_new = tuple(int(x) for x in v_new)
    if gcd(*v_new) != 1:
        raise ToricError(f"new ray {v_new} is not primitive")

    rays = [ray_data(fan, i + 1) for i in sigma]
    coords = cone_coordinates(v_new, [rd.v for rd in rays])
    if coords is None or any(x <= 0 for x in coords):
        raise ToricError(f"new ray {v_new} is not in the interior of cone {[i + 1 for i in sigma]}")

    m = lcm(*(Fraction(x).denominator for x in coords))
    h_i = [int(x * m) for x in coords]
    h = lcm(*(rd.b // gcd(hi, rd.b) for hi, rd in zip(h_i, rays)))
    b_new = h * m
    c = tuple(h * hi // rd.b for hi, rd in zip(h_i, rays))

    s = fan.s
    B_new = np.zeros((2, s + 1), dtype=object)
    B_new[:, :s] = fan.B
    B_new[:, s] = [b_new * x for x in v_new]
    cones = []
    for cone in fan.max_cones:
        if set(cone) == set(sigma):
            cones.extend([(sigma[0], s), (s, sigma[1])])
        else:
            cones.append(cone)
    blown_up = make_fan(2, (), B_new, cones)

    C = np.zeros((s, s + 1), dtype=object)
    C[:, :s] = identity(s)
    for i, ci in zip(sigma, c):
        C[i, s] = ci
    psi = make_morphism(
        blown_up, fan,
        C=C,
        D=identity(2),
        E=np.zeros((0, 0), dtype=object),
        F=np.zeros((0, s + 1), dtype=object),
    )
    logger.debug(f"blow-up of cone {[i + 1 for i in sigma]} at {v_new}: m={m}, h={h}, b_new={b_new}, c={c}")
    return BlowupStep(fan=blown_up, morphism=psi, cone=sigma, v_new=v_new, b_new=b_new, c=c)


def hilbert_basis_ray(u: Sequence[int], v: Sequence[int]) -> Tuple[int, int]:
    """
    Hilbert basis element of cone(u, v) adjacent to u.

    It is (v + q·u)/d with d = |det(u, v)| and q the unique residue in
    (0, d) making the vector integral.
    """
    d = abs(u[0] * v[1] - u[1] * v[0])
    if d <= 1:
        raise ToricError(f"cone({tuple(u)}, {tuple(v)}) is already unimodular")
    for q in range(1, d):
        w = (v[0] + q * u[0], v[1] + q * u[1])
        if w[0] % d == 0 and w[1] % d == 0:
            return (w[0] // d, w[1] // d)
    raise ToricError(f"rays {tuple(u)} and {tuple(v)} are not primitive")


def singular_cones(fan: StackyFan) -> List[Tuple[int, ...]]:
    """Maximal cones whose primitive generators do not form a lattice basis."""
    _require_2d_orbifold(fan)
    out = []
    for cone in fan.max_cones:
        u, v = (ray_data(fan, i + 1).v for i in cone)
        if abs(u[0] * v[1] - u[1] * v[0]) > 1:
            out.append(cone)
    return out


def resolve_2d(fan: StackyFan) -> List[BlowupStep]:
    """Blow up singular cones one Hilbert-basis ray at a time until the coarse fan is smooth."""
    _require_2d_orbifold(fan)
    steps: List[BlowupStep] = []
    current = fan
    while True:
        singular = singular_cones(current)
        if not singular:
            break
        if len(steps) >= MAX_RESOLUTION_STEPS:
            raise ToricError(f"resolution did not finish within {MAX_RESOLUTION_STEPS} blow-ups")
        cone = singular[0]
        u, v = (ray_data(current, i + 1).v for i in cone)
        step = weighted_blowup(current, cone, hilbert_basis_ray(u, v))
        steps.append(step)
        current = step.fan
    logger.info(f"resolved with {len(steps)} weighted blow-up(s)")
    return steps
