"""
Frobenius push-forwards of line bundles

F_m is multiplication by m on the stacky fan data. F_m,* L splits into line
bundles, which we compute two independent ways:
    - by characters: for j in [0, m-1]^s every solution chi' of
      m·chi' = cls(L) - cl(j) contributes one summand;
    - on the lattice: O(floor((k + tB·u)/m) D)_{(l + tA·u)/m} for
      u in [0, m-1]^{n+r} with (l + tA·u)/m integral.
The stabilized summand set is the lattice formula on a grid fine enough to
meet every cell of the arrangement cut out by tB, tA and the coordinates.
"""
import itertools
import logging
from collections import Counter
from math import lcm
from typing import FrozenSet, Iterable, List

import numpy as np

from src.algebra import determinant, divide_element, int_matrix
from src.config import Config
from src.errors import CertificationError, UnsupportedFanError
from src.fans.picard import (
    LineBundle,
    bundle,
    bundle_from_class,
    canonical_class,
    degree,
    picard_group,
    structure_sheaf,
)
from src.fans.stackyfan import StackyFan
from src.constructions.morphisms import pullback
from src.constructions.stacks import rigidification
from src.utils.lattice import as_int64, box_points, check_grid_size, exact_matmul, unique_rows

logger = logging.getLogger(__name__)


class SummandMultiset(Counter):
    """Line bundle -> multiplicity in a push-forward."""

    def support(self) -> FrozenSet[LineBundle]:
        return frozenset(L for L, mult in self.items() if mult > 0)

    def total_rank(self) -> int:
        return sum(self.values())


def sorted_bundles(bundles: Iterable[LineBundle]) -> List[LineBundle]:
    """Deterministic order: lexicographic on canonical representatives."""
    return sorted(bundles, key=lambda L: L.sort_key())


def pushforward_by_characters(fan: StackyFan, L: LineBundle, m: int) -> SummandMultiset:
    """
    Decompose F_m,* L through the character formula.

    Args:
        fan: the stacky fan
        L: line bundle on fan
        m: Frobenius degree, m >= 1

    Returns:
        SummandMultiset with multiplicities
    """
    if m < 1:
        raise ValueError(f"Frobenius degree must be positive, got {m}")
    group = picard_group(fan).group
    check_grid_size(m ** fan.s, f"character grid [0, {m - 1}]^{fan.s}")

    J = box_points(fan.s, 0, m - 1)
    vectors = np.hstack([J, np.zeros((len(J), fan.r), dtype=np.int64)])
    classes, counts = unique_rows(group.project_many(vectors))

    result = SummandMultiset()
    f = group.free_rank
    for row, count in zip(classes, counts):
        cl_j = group.element(row[:f], row[f:])
        for chi in divide_element(group, L.cls - cl_j, m):
            result[bundle_from_class(fan, chi)] += int(count)
    logger.debug(f"F_{m},* {L}: {len(result)} classes, total rank {result.total_rank()}")
    return result


def pushforward_by_lattice(fan: StackyFan, L: LineBundle, m: int) -> FrozenSet[LineBundle]:
    """
    Summand classes of F_m,* L through the lattice formula (no multiplicities).
    """
    if m < 1:
        raise ValueError(f"Frobenius degree must be positive, got {m}")
    dim = fan.n + fan.r
    U = box_points(dim, 0, m - 1)
    B = np.asarray(fan.B, dtype=object).reshape(dim, fan.s)
    A = np.asarray(fan.A, dtype=object).reshape(dim, fan.r)

    K = np.floor_divide(as_int64(L.k, "divisor") + exact_matmul(U, B, "lattice grid against B"), m)
    T = as_int64(L.l, "character") + exact_matmul(U, A, "lattice grid against A")
    integral = np.all(T % m == 0, axis=1)
    reps, _ = unique_rows(np.hstack([K[integral], T[integral] // m]))
    return frozenset(bundle(fan, row[:fan.s], row[fan.s:]) for row in reps)


def certified_grid_size(fan: StackyFan) -> int:
    """
    m* such that the grid (1/m*)Z^{n+r} meets every cell of the arrangement.

    Cell vertices have denominators dividing g, the lcm of the nonzero
    maximal minors of the normals (rows of tB, rows of tA, unit vectors);
    barycenters of cell simplices add a factor lcm(1, ..., n+r+1).
    """
    dim = fan.n + fan.r
    normals = [fan.B[:, j] for j in range(fan.s)] + [fan.A[:, j] for j in range(fan.r)]
    normals += [np.eye(dim, dtype=int)[i] for i in range(dim)]
    g = 1
    for combo in itertools.combinations(range(len(normals)), dim):
        det = determinant(int_matrix([list(normals[i]) for i in combo], rows=dim, cols=dim))
        if det:
            g = lcm(g, abs(det))
    return g * lcm(*range(1, dim + 2))


def stable_summands(fan: StackyFan) -> FrozenSet[LineBundle]:
    """The stabilized set of summands of F_m,* O for sufficiently divisible m."""
    m_star = certified_grid_size(fan)
    logger.info(f"stable summands: certified grid size m* = {m_star} "
                f"({m_star ** (fan.n + fan.r)} points)")
    summands = pushforward_by_lattice(fan, structure_sheaf(fan), m_star)
    if Config.SELF_CHECK:
        doubled = pushforward_by_lattice(fan, structure_sheaf(fan), 2 * m_star)
        if doubled != summands:
            raise CertificationError(f"summand set changed between m* = {m_star} and {2 * m_star}")
        logger.info("stable summands: doubling self-check passed")
    return summands


def degree_window_check(fan: StackyFan) -> List[LineBundle]:
    """
    Stable summands violating deg K < deg L <= 0 (Picard free rank one).

    Returns:
        offending classes; empty when the window holds
    """
    if picard_group(fan).group.free_rank != 1:
        raise UnsupportedFanError("degree window needs Picard free rank 1")
    deg_k = degree(fan, canonical_class(fan))
    return sorted_bundles(L for L in stable_summands(fan) if not deg_k < degree(fan, L) <= 0)


def rootstack_summand_decomposition_check(fan: StackyFan) -> bool:
    """
    Compare the summand set with the rigidified one twisted by every O_l.

    The fan must have torsion rows of B divisible by the torsion orders
    (after rewriting them to zero this is the reduced root-stack shape):
        D_X = union over l in prod [0, a_i) of Psi^*(D_rig) (x) O_l.
    """
    if fan.r == 0:
        return True
    torsion_rows = fan.B[fan.n:]
    for i, a in enumerate(fan.torsion):
        if any(int(x) % a for x in torsion_rows[i]):
            raise UnsupportedFanError(
                f"torsion row {i + 1} of B is not divisible by {a}; fan is not of reduced root-stack shape")
    # O_l in the rewritten presentation is O((tT·l) D)_l here, T = torsion rows / a
    T = np.array([[int(x) // a for x in row] for row, a in zip(torsion_rows, fan.torsion)], dtype=object)

    rig, psi = rigidification(fan)
    pulled = [pullback(psi, L) for L in stable_summands(rig)]
    union = set()
    for l in itertools.product(*(range(a) for a in fan.torsion)):
        twist = bundle(fan, T.T.dot(np.array(l, dtype=object)), l)
        union.update(L + twist for L in pulled)

    lhs = stable_summands(fan)
    if lhs != union:
        logger.warning(f"decomposition mismatch: {len(lhs)} summands vs {len(union)} from the rigidification")
    return lhs == union
