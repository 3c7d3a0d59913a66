"""
Finitely generated abelian groups as cokernels

A group is Z^rows / column-span(M), normalized through the Smith normal form
of M into Z^f + Z/d_1 + ... + Z/d_t.
"""
import itertools
import logging
from dataclasses import dataclass
from math import gcd
from typing import Callable, List, Sequence, Tuple

import numpy as np

from src.algebra.normal_forms import diagonal, int_matrix, int_vector, smith_normal_form
from src.utils.lattice import as_int64, exact_matmul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElement:
    """An element in normal coordinates; torsion residues are always reduced."""

    free_part: Tuple[int, ...]
    torsion_part: Tuple[int, ...]
    moduli: Tuple[int, ...]

    def __post_init__(self):
        reduced = tuple(int(x) % d for x, d in zip(self.torsion_part, self.moduli))
        object.__setattr__(self, 'free_part', tuple(int(x) for x in self.free_part))
        object.__setattr__(self, 'torsion_part', reduced)

    def __add__(self, other: 'GroupElement') -> 'GroupElement':
        return GroupElement(
            tuple(a + b for a, b in zip(self.free_part, other.free_part)),
            tuple(a + b for a, b in zip(self.torsion_part, other.torsion_part)),
            self.moduli,
        )

    def __neg__(self) -> 'GroupElement':
        return GroupElement(
            tuple(-a for a in self.free_part),
            tuple(-a for a in self.torsion_part),
            self.moduli,
        )

    def __sub__(self, other: 'GroupElement') -> 'GroupElement':
        return self + (-other)

    def __rmul__(self, c: int) -> 'GroupElement':
        return GroupElement(
            tuple(c * a for a in self.free_part),
            tuple(c * a for a in self.torsion_part),
            self.moduli,
        )

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def coordinates(self) -> Tuple[int, ...]:
        return self.free_part + self.torsion_part


@dataclass(frozen=True, eq=False)
class FgAbGroup:
    """
    Z^free_rank + Z/d_1 + ... + Z/d_t with the maps to and from a presentation.

    to_normal has one row per normal coordinate (free rows first, then torsion
    rows); from_normal has one column per normal coordinate.
    """

    free_rank: int
    invariant_factors: Tuple[int, ...]
    to_normal: np.ndarray
    from_normal: np.ndarray

    @property
    def presentation_rank(self) -> int:
        return self.to_normal.shape[1]

    def element(self, free_part: Sequence[int], torsion_part: Sequence[int]) -> GroupElement:
        return GroupElement(tuple(free_part), tuple(torsion_part), self.invariant_factors)

    def zero(self) -> GroupElement:
        return self.element([0] * self.free_rank, [0] * len(self.invariant_factors))

    def project(self, v: Sequence[int]) -> GroupElement:
        """Image of a presentation vector."""
        if len(v) != self.presentation_rank:
            raise ValueError(f"vector of length {len(v)}, presentation has rank {self.presentation_rank}")
        y = self.to_normal.dot(int_vector(v)) if self.to_normal.shape[0] else []
        y = [int(x) for x in y]
        return self.element(y[:self.free_rank], y[self.free_rank:])

    def project_many(self, vectors: np.ndarray) -> np.ndarray:
        """
        Normal coordinates for a batch of presentation vectors (one per row).

        Works on int64 batches; torsion columns come back reduced. Raises
        IntegerRangeError when the product could leave the int64 range.
        """
        vectors = as_int64(vectors, "presentation vectors")
        coords = exact_matmul(vectors, self.to_normal.T, "projection to normal coordinates")
        if self.invariant_factors:
            moduli = np.array(self.invariant_factors, dtype=np.int64)
            coords[:, self.free_rank:] = np.mod(coords[:, self.free_rank:], moduli)
        return coords

    def lift(self, x: GroupElement) -> np.ndarray:
        """A presentation vector projecting onto x."""
        return self.from_normal.dot(int_vector(x.coordinates())) if self.from_normal.shape[1] \
            else int_vector([0] * self.presentation_rank)

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append('Z' if self.free_rank == 1 else f'Z^{self.free_rank}')
        parts.extend(f'Z/{d}' for d in self.invariant_factors)
        return ' + '.join(parts) if parts else '0'


def cokernel(M) -> Tuple[FgAbGroup, Callable[[Sequence[int]], GroupElement]]:
    """
    Normalize Z^rows / column-span(M).

    Returns:
        (group, project) where project maps Z^rows onto the group
    """
    M = int_matrix(M)
    rows = M.shape[0]
    U, S, _, Uinv, _ = smith_normal_form(M, return_inverses=True)
    diag = diagonal(S)
    r = sum(1 for d in diag if d != 0)

    torsion_idx = [i for i in range(r) if diag[i] > 1]
    free_idx = list(range(r, rows))
    keep = free_idx + torsion_idx

    group = FgAbGroup(
        free_rank=len(free_idx),
        invariant_factors=tuple(diag[i] for i in torsion_idx),
        to_normal=U[keep, :] if keep else np.zeros((0, rows), dtype=object),
        from_normal=Uinv[:, keep] if keep else np.zeros((rows, 0), dtype=object),
    )
    logger.debug(f"cokernel of {M.shape} matrix: {group.describe()}")
    return group, group.project


def divide_element(G: FgAbGroup, t: GroupElement, m: int) -> List[GroupElement]:
    """
    All x in G with m·x = t.

    Args:
        G: the group
        t: target element
        m: positive divisor

    Returns:
        every solution; empty when none exists
    """
    if m < 1:
        raise ValueError(f"divisor must be positive, got {m}")
    free = []
    for value in t.free_part:
        if value % m:
            return []
        free.append(value // m)

    choices = []
    for value, d in zip(t.torsion_part, G.invariant_factors):
        g = gcd(m, d)
        if value % g:
            return []
        step = d // g
        # m·x ≡ value (mod d)  <=>  (m/g)·x ≡ value/g (mod d/g)
        base = (value // g) * pow(m // g, -1, step) % step if step > 1 else 0
        choices.append([base + i * step for i in range(g)])

    return [G.element(free, torsion) for torsion in itertools.product(*choices)]
