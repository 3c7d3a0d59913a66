"""
Toric morphisms between stacky fans

A morphism X -> X' is recorded by integer matrices
    C: s' x s     (rays of the source to rays of the target)
    D: (n'+r') x (n+r)
    E: r' x r
    F: r' x s     (homotopy)
with D·B - B'·C = A'·F and D·A = A'·E. Line bundles pull back by
    O(k'D')_{l'}  ->  O((tC·k' + tF·l')D)_{tE·l'}.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from src.algebra import identity, int_matrix, int_vector, matmul
from src.errors import MorphismError
from src.fans.picard import LineBundle, bundle
from src.fans.stackyfan import StackyFan

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ToricMorphism:
    source: StackyFan
    target: StackyFan
    C: np.ndarray
    D: np.ndarray
    E: np.ndarray
    F: np.ndarray

    def to_dict(self) -> dict:
        def rows(M):
            return [[int(x) for x in row] for row in M]
        return {'C': rows(self.C), 'D': rows(self.D), 'E': rows(self.E), 'F': rows(self.F)}


def cone_coordinates(vector: Sequence[int], generators: Sequence[Sequence[int]]) -> Optional[List[Fraction]]:
    """
    Coefficients expressing vector in the generators (at most 2 independent ones).

    Returns:
        exact coefficients, or None when vector is outside their linear span
    """
    x = [int(c) for c in vector]
    if not generators:
        return [] if not any(x) else None
    if len(generators) == 1:
        g = [int(c) for c in generators[0]]
        pivot = next(i for i, c in enumerate(g) if c)
        t = Fraction(x[pivot], g[pivot])
        return [t] if all(t * gi == xi for gi, xi in zip(g, x)) else None
    if len(generators) == 2 and len(x) == 2:
        (a, c), (b, d) = generators
        det = a * d - b * c
        if det == 0:
            return None
        return [Fraction(x[0] * d - b * x[1], det), Fraction(a * x[1] - c * x[0], det)]
    raise MorphismError(f"cone membership is only implemented up to rank 2, got {len(generators)} generators")


def _shape_problems(phi: ToricMorphism) -> List[str]:
    src, tgt = phi.source, phi.target
    expected = {
        'C': (tgt.s, src.s),
        'D': (tgt.n + tgt.r, src.n + src.r),
        'E': (tgt.r, src.r),
        'F': (tgt.r, src.s),
    }
    return [f"{name} has shape {getattr(phi, name).shape}, expected {shape}"
            for name, shape in expected.items() if getattr(phi, name).shape != shape]


def validate_morphism(phi: ToricMorphism) -> List[str]:
    """Every violated identity or fan condition; empty when phi is valid."""
    problems = _shape_problems(phi)
    if problems:
        return problems
    src, tgt = phi.source, phi.target

    lhs = matmul(phi.D, src.B) - matmul(tgt.B, phi.C)
    if not (lhs == matmul(tgt.A, phi.F)).all():
        problems.append("D·B - B'·C != A'·F")
    if not (matmul(phi.D, src.A) == matmul(tgt.A, phi.E)).all():
        problems.append("D·A != A'·E")
    if problems or tgt.n > 2:
        return problems

    image = matmul(phi.D, src.B)[:tgt.n]
    for sigma in src.max_cones:
        routed = ray_images_ok = False
        for tau in tgt.max_cones:
            gens = [tgt.ray(i) for i in tau]
            coords = [cone_coordinates(image[:, j], gens) for j in sigma]
            if all(c is not None and all(x >= 0 for x in c) for c in coords):
                ray_images_ok = True
                if all(phi.C[i, j] >= 0 and (phi.C[i, j] == 0 or i in tau)
                       for j in sigma for i in range(tgt.s)):
                    routed = True
                    break
        label = [j + 1 for j in sigma]
        if not ray_images_ok:
            problems.append(f"(T1) cone {label} does not map into a target cone")
        elif not routed:
            problems.append(f"(T2) rays of cone {label} are not routed nonnegatively into one target cone")
    return problems


def make_morphism(source: StackyFan, target: StackyFan, C, D, E, F, check: bool = True) -> ToricMorphism:
    """Assemble morphism data, raising MorphismError when it is inconsistent."""
    phi = ToricMorphism(
        source=source,
        target=target,
        C=int_matrix(C, rows=target.s, cols=source.s),
        D=int_matrix(D, rows=target.n + target.r, cols=source.n + source.r),
        E=int_matrix(E, rows=target.r, cols=source.r),
        F=int_matrix(F, rows=target.r, cols=source.s),
    )
    if check:
        problems = validate_morphism(phi)
        if problems:
            raise MorphismError("invalid toric morphism: " + "; ".join(problems))
    return phi


def pullback(phi: ToricMorphism, L: LineBundle) -> LineBundle:
    """phi^* of a line bundle on the target."""
    if L.fan is not phi.target:
        raise MorphismError("line bundle does not live on the morphism target")
    k_prime, l_prime = int_vector(L.k), int_vector(L.l)
    k = matmul(phi.C.T, k_prime.reshape(-1, 1)).ravel() + matmul(phi.F.T, l_prime.reshape(-1, 1)).ravel()
    l = matmul(phi.E.T, l_prime.reshape(-1, 1)).ravel()
    return bundle(phi.source, k, l)


def identity_morphism(fan: StackyFan) -> ToricMorphism:
    return frobenius_morphism(fan, 1)


def frobenius_morphism(fan: StackyFan, m: int) -> ToricMorphism:
    """Multiplication by m on every piece of the stacky fan data."""
    if m < 1:
        raise MorphismError(f"Frobenius degree must be positive, got {m}")
    return make_morphism(
        fan, fan,
        C=m * identity(fan.s),
        D=m * identity(fan.n + fan.r),
        E=m * identity(fan.r),
        F=np.zeros((fan.r, fan.s), dtype=object),
    )
