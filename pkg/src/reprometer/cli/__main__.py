"""Entry point for running reprometer.cli as a module.

Usage:
    python -m reprometer.cli [command] [options]
"""

import sys

from reprometer.cli import main

if __name__ == "__main__":
    sys.exit(main())
