"""
Exact Integer Algebra Module

This module provides:
- Smith and Hermite normal forms over arbitrary-precision integers
- Integer linear solving
- Finitely generated abelian groups presented as cokernels
"""

from .normal_forms import (
    int_matrix,
    int_vector,
    identity,
    determinant,
    smith_normal_form,
    hermite_normal_form,
    reduce_by_hermite,
    solve_integer,
    rank,
    matmul,
)
from .groups import FgAbGroup, GroupElement, cokernel, divide_element

__all__ = [
    'int_matrix',
    'int_vector',
    'identity',
    'determinant',
    'smith_normal_form',
    'hermite_normal_form',
    'reduce_by_hermite',
    'solve_integer',
    'rank',
    'matmul',
    'FgAbGroup',
    'GroupElement',
    'cokernel',
    'divide_element',
]
