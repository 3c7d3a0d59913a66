"""
Exceptional collections of line bundles

Ext tables, ordering search, the K-rank fullness proxy and subset scans
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import pandas as pd

from src.cohomology import ext
from src.config import Config
from src.errors import PoolTooLargeError, ToricError
from src.fans.picard import LineBundle, render
from src.fans.stackyfan import StackyFan
from src.geometry import k_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtTable:
    """table[(i, j)] = (ext^0, ..., ext^n) of Ext^*(bundles[i], bundles[j])."""

    bundles: Tuple[LineBundle, ...]
    table: Dict[Tuple[int, int], Tuple[int, ...]]

    def __getitem__(self, pair: Tuple[int, int]) -> Tuple[int, ...]:
        return self.table[pair]

    def restrict(self, indices: Sequence[int]) -> 'ExtTable':
        return ExtTable(
            bundles=tuple(self.bundles[i] for i in indices),
            table={(a, b): self.table[(i, j)]
                   for a, i in enumerate(indices) for b, j in enumerate(indices)},
        )

    def to_frame(self) -> pd.DataFrame:
        names = [render(L) for L in self.bundles]
        rows = [[','.join(map(str, self.table[(i, j)])) for j in range(len(names))]
                for i in range(len(names))]
        return pd.DataFrame(rows, index=names, columns=names)


def ext_table(fan: StackyFan, bundles: Iterable[LineBundle]) -> ExtTable:
    """
    All pairwise Ext^* between the given line bundles.

    Args:
        fan: complete orbifold of rank <= 2
        bundles: line bundles on fan, kept in the given order

    Returns:
        ExtTable
    """
    bundles = tuple(bundles)
    table = {}
    for i, j in itertools.product(range(len(bundles)), repeat=2):
        table[(i, j)] = ext(fan, bundles[i], bundles[j])
    logger.debug(f"ext table for {len(bundles)} bundles")
    return ExtTable(bundles=bundles, table=table)


def find_exceptional_ordering(T: ExtTable, strong: bool = False) -> Optional[List[LineBundle]]:
    """
    An order in which the bundles form an exceptional collection, if any.

    Args:
        T: Ext table of the candidate collection
        strong: also require every off-diagonal ext^i, i > 0, to vanish

    Returns:
        bundles in collection order, or None
    """
    size = len(T.bundles)
    for i in range(size):
        if any(T[(i, i)][1:]) or T[(i, i)][0] != 1:
            logger.debug(f"{T.bundles[i]} is not exceptional")
            return None

    G = nx.DiGraph()
    G.add_nodes_from(range(size))
    for i, j in itertools.permutations(range(size), 2):
        if strong and any(T[(i, j)][1:]):
            return None
        if T[(i, j)][0] and T[(j, i)][0]:
            raise ToricError(f"Hom is nonzero both ways between {T.bundles[i]} and {T.bundles[j]}")
        if any(T[(i, j)]):
            G.add_edge(i, j)

    try:
        order = list(nx.lexicographical_topological_sort(G, key=lambda i: T.bundles[i].sort_key()))
    except nx.NetworkXUnfeasible:
        return None
    return [T.bundles[i] for i in order]


class RankProxy(NamedTuple):
    """Collection size against rk K; equality is necessary for fullness, not sufficient."""

    passes: bool
    k_rank: int
    size: int


def fullness_rank_proxy(fan: StackyFan, collection: Sequence[LineBundle]) -> RankProxy:
    rank, on_boundary = k_rank(fan)
    if not on_boundary:
        raise ToricError("some ray image is interior to the hull; the K-rank formula does not apply")
    size = len(set(collection))
    return RankProxy(passes=size == rank, k_rank=rank, size=size)


def scan_subsets(fan: StackyFan, pool: Iterable[LineBundle], size: int,
                 strong: bool = False) -> List[FrozenSet[LineBundle]]:
    """
    Every size-element subset of pool that admits an exceptional ordering.

    The Ext table of the whole pool is computed once and restricted per subset.
    """
    pool = sorted(set(pool), key=lambda L: L.sort_key())
    if len(pool) > Config.SCAN_POOL_LIMIT:
        raise PoolTooLargeError(
            f"pool has {len(pool)} bundles, above the scan limit of {Config.SCAN_POOL_LIMIT} "
            f"(raise TORIC_SCAN_POOL_LIMIT to allow it)")
    if not 0 <= size <= len(pool):
        return []

    full = ext_table(fan, pool)
    found = []
    for indices in itertools.combinations(range(len(pool)), size):
        if find_exceptional_ordering(full.restrict(indices), strong=strong) is not None:
            found.append(frozenset(pool[i] for i in indices))
    logger.info(f"scan: {len(found)} of the size-{size} subsets of {len(pool)} bundles are "
                f"{'strong ' if strong else ''}exceptional")
    return found
