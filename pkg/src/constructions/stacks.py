"""
Root stacks, rigidification and closed toric substacks
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from src.algebra import identity, matmul
from src.errors import DimensionMismatchError, FanValidationError, ToricError
from src.fans.picard import LineBundle, bundle
from src.fans.presentation import normalize_presentation
from src.fans.stackyfan import StackyFan, make_fan, weighted_projective
from src.constructions.morphisms import ToricMorphism, make_morphism

logger = logging.getLogger(__name__)


def root_stack_divisors(fan: StackyFan, c: Sequence[int]) -> Tuple[StackyFan, ToricMorphism]:
    """
    Take the c_i-th root of each toric divisor D_i.

    Args:
        fan: the stacky fan
        c: positive integers, one per ray

    Returns:
        (rooted fan with B·diag(c), morphism to the original fan)
    """
    c = [int(x) for x in c]
    if len(c) != fan.s:
        raise DimensionMismatchError(f"need {fan.s} root orders, got {len(c)}")
    if any(x < 1 for x in c):
        raise ToricError(f"root orders must be positive, got {c}")
    diag = np.zeros((fan.s, fan.s), dtype=object)
    for i, x in enumerate(c):
        diag[i, i] = x
    rooted = make_fan(fan.n, fan.torsion, matmul(fan.B, diag), fan.max_cones)
    phi = make_morphism(
        rooted, fan,
        C=diag,
        D=identity(fan.n + fan.r),
        E=identity(fan.r),
        F=np.zeros((fan.r, fan.s), dtype=object),
    )
    return rooted, phi


def root_stack_line_bundles(fan: StackyFan, bundles: Sequence[LineBundle],
                            e: Sequence[int]) -> Tuple[StackyFan, ToricMorphism]:
    """
    Root stack extracting the e_i-th root of each given line bundle.

    The new generic torsion comes from A' = (A 0; -tl_i e_i) and
    B' = (B; -tk_i); the result is renormalized to A = [0; diag].

    Returns:
        (root stack fan, morphism to the original fan)
    """
    e = [int(x) for x in e]
    if len(bundles) != len(e) or not e:
        raise DimensionMismatchError(f"need one root order per bundle, got {len(bundles)} bundles and {len(e)} orders")
    if any(x < 1 for x in e):
        raise ToricError(f"root orders must be positive, got {e}")
    if any(L.fan is not fan for L in bundles):
        raise ToricError("line bundles must live on the given fan")

    rows, r, extra = fan.n + fan.r, fan.r, len(e)
    A_prime = np.zeros((rows + extra, r + extra), dtype=object)
    A_prime[:rows, :r] = fan.A
    B_prime = np.zeros((rows + extra, fan.s), dtype=object)
    B_prime[:rows] = fan.B
    for i, (L, order) in enumerate(zip(bundles, e)):
        A_prime[rows + i, :r] = [-x for x in L.l]
        A_prime[rows + i, r + i] = order
        B_prime[rows + i] = [-x for x in L.k]

    n, torsion, B_new, change = normalize_presentation(A_prime, B_prime)
    rooted = make_fan(n, torsion, B_new, fan.max_cones)

    D_old = np.zeros((rows, rows + extra), dtype=object)
    D_old[:, :rows] = identity(rows)
    E_old = np.zeros((r, r + extra), dtype=object)
    E_old[:, :r] = identity(r)
    C, D, E, F = change.source_morphism(
        identity(fan.s), D_old, E_old, np.zeros((r, fan.s), dtype=object))
    phi = make_morphism(rooted, fan, C, D, E, F)
    logger.info(f"root stack of {extra} line bundle(s): torsion {fan.torsion} -> {torsion}")
    return rooted, phi


def rigidification(fan: StackyFan) -> Tuple[StackyFan, ToricMorphism]:
    """Drop the torsion rows of B: the orbifold with trivial generic stabilizer."""
    rig = make_fan(fan.n, (), fan.B[:fan.n], fan.max_cones)
    D = np.zeros((fan.n, fan.n + fan.r), dtype=object)
    D[:, :fan.n] = identity(fan.n)
    psi = make_morphism(
        fan, rig,
        C=identity(fan.s),
        D=D,
        E=np.zeros((0, fan.r), dtype=object),
        F=np.zeros((0, fan.s), dtype=object),
    )
    return rig, psi


def rigidification_bundles(fan: StackyFan, rig: StackyFan) -> List[LineBundle]:
    """L_i = O(-sum_j b_{n+i,j} D_j) on the rigidification, one per torsion row."""
    return [bundle(rig, [-int(x) for x in fan.B[fan.n + i]]) for i in range(fan.r)]


def substack(fan: StackyFan, tau: Sequence[int]) -> StackyFan:
    """
    Closed toric substack for the cone tau (0-based ray indices).

    N(tau) = N / <beta(f_i) : i in tau>, rays are those adjacent to tau, and
    cones are the images of the maximal cones containing tau.
    """
    tau = tuple(sorted(set(int(i) for i in tau)))
    if not tau:
        raise ToricError("substack needs a nonzero cone")
    if not fan.contains_cone(tau):
        raise FanValidationError([f"cone {[i + 1 for i in tau]} is not in the fan"])

    star_cones = [sigma for sigma in fan.max_cones if set(tau) <= set(sigma)]
    star_rays = sorted({i for sigma in star_cones for i in sigma} - set(tau))
    position = {ray: pos for pos, ray in enumerate(star_rays)}

    A_tau = np.hstack([fan.B[:, list(tau)], fan.A]).astype(object)
    B_tau = fan.B[:, star_rays] if star_rays else np.zeros((fan.n + fan.r, 0), dtype=object)
    n, torsion, B_new, _ = normalize_presentation(A_tau, B_tau)
    cones = [tuple(position[i] for i in sigma if i not in tau) for sigma in star_cones]
    logger.debug(f"substack of cone {[i + 1 for i in tau]}: rank {n}, torsion {torsion}, {len(star_rays)} rays")
    return make_fan(n, torsion, B_new, cones)


def root_of_weighted_projective(c: int) -> StackyFan:
    """c-th root of both toric divisors of P(c, c)."""
    if c < 1:
        raise ToricError(f"root order must be positive, got {c}")
    rooted, _ = root_stack_divisors(weighted_projective((c, c)), (c, c))
    return rooted
