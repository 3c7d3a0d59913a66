"""
Frobenius Push-forward Module

This module provides functionality for:
- Push-forward of line bundles along F_m by the character and lattice formulas
- The stabilized summand set and its certified grid size
- Degree-window and root-stack decomposition checks
"""

from .pushforward import (
    SummandMultiset,
    certified_grid_size,
    degree_window_check,
    pushforward_by_characters,
    pushforward_by_lattice,
    rootstack_summand_decomposition_check,
    sorted_bundles,
    stable_summands,
)

__all__ = [
    'SummandMultiset',
    'certified_grid_size',
    'degree_window_check',
    'pushforward_by_characters',
    'pushforward_by_lattice',
    'rootstack_summand_decomposition_check',
    'sorted_bundles',
    'stable_summands',
]
