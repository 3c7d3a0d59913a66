"""
Command-Line Tool for toric stack computations

Usage:
    python toric_cli.py validate fans/example3.json
    python toric_cli.py summands example3 --stable
    python toric_cli.py cohomology example3 --k=0,0,-3,-1,1
    python toric_cli.py reproduce --example example3
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).resolve().parent
sys.path.insert(0, str(project_root))

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
