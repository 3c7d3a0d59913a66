"""
Stacky Fans Module

This module provides functionality for:
- The stacky fan data type, validation and standard constructors
- Renormalization of presentations of N
- Picard groups, line bundle classes and degrees
"""

from .stackyfan import (
    RayData,
    StackyFan,
    cyclic_ray_order,
    fan_from_rays,
    hirzebruch,
    make_fan,
    product_of_lines,
    projective_line,
    projective_plane,
    ray_data,
    validate,
    weighted_projective,
)
from .presentation import PresentationChange, normalize_presentation
from .picard import (
    LineBundle,
    PicardGroup,
    bundle,
    bundle_from_class,
    canonical_class,
    degree,
    divisor,
    generic_stabilizer_order,
    parse_bundle,
    pic_description,
    picard_group,
    render,
    structure_sheaf,
)

__all__ = [
    'RayData',
    'StackyFan',
    'cyclic_ray_order',
    'fan_from_rays',
    'hirzebruch',
    'make_fan',
    'product_of_lines',
    'projective_line',
    'projective_plane',
    'ray_data',
    'validate',
    'weighted_projective',
    'PresentationChange',
    'normalize_presentation',
    'LineBundle',
    'PicardGroup',
    'bundle',
    'bundle_from_class',
    'canonical_class',
    'degree',
    'divisor',
    'generic_stabilizer_order',
    'parse_bundle',
    'pic_description',
    'picard_group',
    'render',
    'structure_sheaf',
]
