"""
Data module for fan files

This module provides functionality for:
- Parsing and validating JSON fan files
- Writing fans back out in the same format
- Locating the bundled example fans
"""

from src.data.fanfile import dump_fan, example_fan_path, load_fan, parse_fan, save_fan

__all__ = [
    'parse_fan',
    'load_fan',
    'dump_fan',
    'save_fan',
    'example_fan_path',
]
