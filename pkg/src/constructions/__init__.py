"""
Stack Constructions Module

This module provides functionality for:
- Toric morphisms, their validation and line bundle pullback
- Root stacks of divisors and of line bundles
- Rigidification and closed toric substacks
- Weighted blow-ups and resolution of 2-dimensional orbifolds
"""

from .morphisms import (
    ToricMorphism,
    cone_coordinates,
    frobenius_morphism,
    identity_morphism,
    make_morphism,
    pullback,
    validate_morphism,
)
from .stacks import (
    rigidification,
    rigidification_bundles,
    root_of_weighted_projective,
    root_stack_divisors,
    root_stack_line_bundles,
    substack,
)
from .blowups import BlowupStep, hilbert_basis_ray, resolve_2d, singular_cones, weighted_blowup

__all__ = [
    'ToricMorphism',
    'cone_coordinates',
    'frobenius_morphism',
    'identity_morphism',
    'make_morphism',
    'pullback',
    'validate_morphism',
    'rigidification',
    'rigidification_bundles',
    'root_of_weighted_projective',
    'root_stack_divisors',
    'root_stack_line_bundles',
    'substack',
    'BlowupStep',
    'hilbert_basis_ray',
    'resolve_2d',
    'singular_cones',
    'weighted_blowup',
]
