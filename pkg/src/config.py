"""
Configuration for the toric stacks toolkit
"""
import os
from dotenv import load_dotenv
from pathlib import Path

# Load environment variables from .env file if it exists (for local runs)
load_dotenv(verbose=False, override=False)


def _flag(name: str, default: str = 'false') -> bool:
    return os.getenv(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Configuration class for the project"""

    # Logging
    LOG_LEVEL = os.getenv('TORIC_LOG_LEVEL', 'INFO').upper()

    # Cohomology coset enumeration: box radius is doubled at most this often
    BOX_DOUBLINGS = int(os.getenv('TORIC_BOX_DOUBLINGS', 20))

    # Exhaustive subset scans refuse pools larger than this
    SCAN_POOL_LIMIT = int(os.getenv('TORIC_SCAN_POOL_LIMIT', 12))

    # Largest lattice grid any push-forward enumeration may visit
    MAX_GRID_POINTS = int(os.getenv('TORIC_MAX_GRID_POINTS', 2_000_000))

    # Re-run stable_summands at 2m* and compare
    SELF_CHECK = _flag('TORIC_SELF_CHECK')

    # File Paths
    BASE_DIR = Path(__file__).parent.parent
    EXAMPLES_DIR = Path(os.getenv('TORIC_EXAMPLES_DIR', BASE_DIR / 'fans'))

    @classmethod
    def validate(cls):
        """Validate numeric configuration"""
        for name in ('BOX_DOUBLINGS', 'SCAN_POOL_LIMIT', 'MAX_GRID_POINTS'):
            if getattr(cls, name) < 1:
                raise ValueError(f"{name} must be a positive integer, got {getattr(cls, name)}")
        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ValueError(f"TORIC_LOG_LEVEL '{cls.LOG_LEVEL}' is not a logging level")
        return True

# Validate configuration on import
Config.validate()
