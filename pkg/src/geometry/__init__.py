"""
Geometry module for toric surfaces

This module provides functionality for:
- Support functions and nefness of stacky divisors
- The nef part of the stable summand set
- Convex hull volume and the K-group rank
"""

from src.geometry.nef import (
    HullRank,
    SupportFunction,
    is_nef,
    is_nef_divisor,
    k_rank,
    nef_summands,
    support_function,
)

__all__ = [
    'SupportFunction',
    'support_function',
    'is_nef',
    'is_nef_divisor',
    'nef_summands',
    'HullRank',
    'k_rank',
]
