"""
Exceptional collections module

This module provides functionality for:
- Ext tables between line bundles
- Searching for (strong) exceptional orderings
- The K-rank proxy for fullness
- Exhaustive subset scans
"""

from src.exceptional.collections import (
    ExtTable,
    RankProxy,
    ext_table,
    find_exceptional_ordering,
    fullness_rank_proxy,
    scan_subsets,
)

__all__ = [
    'ExtTable',
    'ext_table',
    'find_exceptional_ordering',
    'RankProxy',
    'fullness_rank_proxy',
    'scan_subsets',
]
