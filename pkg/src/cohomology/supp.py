"""
Supp(r): the subcomplex of the fan spanned by rays with r_i >= 0
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

import networkx as nx

from src.errors import DimensionMismatchError, UnsupportedFanError
from src.fans.stackyfan import StackyFan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuppComplex:
    """Vertices and edges use 0-based ray indices."""

    vertices: FrozenSet[int]
    edges: FrozenSet[FrozenSet[int]]

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(tuple(e) for e in self.edges)
        return G

    def components(self) -> int:
        return nx.number_connected_components(self.graph()) if self.vertices else 0


def require_surface_orbifold(fan: StackyFan):
    if fan.r:
        raise UnsupportedFanError(f"needs an orbifold (no torsion), got torsion {fan.torsion}")
    if fan.n > 2:
        raise UnsupportedFanError(f"only implemented for rank <= 2, got {fan.n}")


def supp_complex(fan: StackyFan, r: Sequence[int]) -> SuppComplex:
    """Full subcomplex on {i : r_i >= 0}."""
    require_surface_orbifold(fan)
    if len(r) != fan.s:
        raise DimensionMismatchError(f"r has length {len(r)}, fan has {fan.s} rays")
    vertices = frozenset(i for i, x in enumerate(r) if x >= 0)
    edges = frozenset(
        frozenset(cone) for cone in fan.max_cones
        if len(cone) == 2 and set(cone) <= vertices
    )
    return SuppComplex(vertices=vertices, edges=edges)


def reduced_homology_dims(K: SuppComplex) -> Tuple[int, int, int]:
    """(h~_-1, h~_0, h~_1) of a complex of dimension at most one."""
    if not K.vertices:
        return (1, 0, 0)
    c = K.components()
    return (0, c - 1, len(K.edges) - len(K.vertices) + c)
