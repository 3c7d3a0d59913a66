"""
Pipelines module

This module provides functionality for:
- Reproducing the worked examples with computed and expected values side by side
"""

from src.pipelines.reproduce import EXAMPLES, Check, ExampleReport, reproduce

__all__ = [
    'Check',
    'ExampleReport',
    'EXAMPLES',
    'reproduce',
]
