"""
Cohomology module for line bundles on toric orbifolds

This module provides functionality for:
- Supp(r) complexes and their reduced homology
- Monomial counts for H^0
- All cohomology groups through the coset formula
- Ext groups between line bundles
"""

from src.cohomology.supp import SuppComplex, reduced_homology_dims, supp_complex
from src.cohomology.line_bundles import cohomology_of_divisor, count_sections, ext, h0, h_all

__all__ = [
    'SuppComplex',
    'supp_complex',
    'reduced_homology_dims',
    'count_sections',
    'cohomology_of_divisor',
    'h0',
    'h_all',
    'ext',
]
