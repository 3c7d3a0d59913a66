"""
Toric Stacks Package
Frobenius push-forwards, cohomology and exceptional collections on toric DM stacks
"""

__version__ = "1.0.0"
