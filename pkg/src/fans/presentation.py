"""
Renormalizing a presentation of N to the shape A = [0; diag(a)]

Given N = Z^rows / column-span(A) with A injective and ray images B, the
Smith normal form U·A·V = S gives new coordinates on Z^rows. Rows whose
invariant factor is 1 are killed, rows with factor >= 2 become torsion, and
the remaining rows are free. The change of basis is kept so that line bundle
classes and morphism data can be carried to the new presentation.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.algebra import int_matrix, int_vector, matmul, smith_normal_form
from src.errors import DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PresentationChange:
    """Change of basis produced by normalize_presentation."""

    U: np.ndarray
    Uinv: np.ndarray
    V: np.ndarray
    UB: np.ndarray
    kept_rows: Tuple[int, ...]
    torsion_rows: Tuple[int, ...]
    dropped_rows: Tuple[int, ...]

    def transport(self, k: Sequence[int], l: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
        """
        Carry O(kD)_l from the old presentation to the normalized one.

        Returns:
            (k', l') in the new presentation, same class
        """
        l_full = self.V.T.dot(int_vector(l)) if len(l) else int_vector([])
        k_new = int_vector(k)
        for d in self.dropped_rows:
            k_new = k_new - l_full[d] * self.UB[d]
        return k_new, int_vector([l_full[t] for t in self.torsion_rows])

    def source_morphism(self, C, D, E, F) -> Tuple[np.ndarray, ...]:
        """
        Rewrite morphism data (C, D, E, F) whose source was renormalized.

        D·B - B'·C = A'·F and D·A = A'·E keep holding with the new source.
        """
        D = int_matrix(D)
        E = int_matrix(E)
        F = int_matrix(F)
        W_kept = self.Uinv[:, list(self.kept_rows)]
        V_kept = self.V[:, list(self.torsion_rows)]
        D_new = matmul(D, W_kept)
        E_new = matmul(E, V_kept)
        F_new = F.copy()
        if self.dropped_rows:
            V_drop = self.V[:, list(self.dropped_rows)]
            F_new = F_new - matmul(matmul(E, V_drop), self.UB[list(self.dropped_rows)])
        return int_matrix(C), D_new, E_new, F_new


def normalize_presentation(A, B) -> Tuple[int, Tuple[int, ...], np.ndarray, PresentationChange]:
    """
    Bring (A, B) to the canonical presentation.

    Args:
        A: injective rows x r0 integer matrix
        B: rows x s integer matrix of ray images

    Returns:
        (n, torsion, B_new, change) with B_new of shape (n + len(torsion)) x s
    """
    A = int_matrix(A)
    rows, r0 = A.shape
    B = int_matrix(B, rows=rows, cols=0)
    if B.shape[0] != rows:
        raise DimensionMismatchError(f"A has {rows} rows but B has {B.shape[0]}")

    U, S, V, Uinv, _ = smith_normal_form(A, return_inverses=True)
    diag = [int(S[i, i]) for i in range(min(S.shape))]
    if sum(1 for d in diag if d) != r0:
        raise DimensionMismatchError("presentation matrix A is not injective")

    torsion_rows = tuple(i for i in range(r0) if diag[i] > 1)
    dropped_rows = tuple(i for i in range(r0) if diag[i] == 1)
    free_rows = tuple(range(r0, rows))
    kept_rows: List[int] = list(free_rows) + list(torsion_rows)

    UB = matmul(U, B)
    B_new = UB[kept_rows] if kept_rows else np.zeros((0, B.shape[1]), dtype=object)
    torsion = tuple(diag[i] for i in torsion_rows)
    logger.debug(f"normalized presentation: rank {len(free_rows)}, torsion {torsion}, "
                 f"dropped {len(dropped_rows)} trivial factors")

    change = PresentationChange(
        U=U, Uinv=Uinv, V=V, UB=UB,
        kept_rows=tuple(kept_rows),
        torsion_rows=torsion_rows,
        dropped_rows=dropped_rows,
    )
    return len(free_rows), torsion, int_matrix(B_new, rows=len(kept_rows), cols=B.shape[1]), change
