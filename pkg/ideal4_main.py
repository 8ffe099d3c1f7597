#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: ideal4_main.py
# Pathname: /path/to/ideal4/
# Description: Main entry point for IDEAL4, the delta(2) invariant toolkit for
#              hypersurfaces of Euclidean 4-space
# -----------------------------------------------------------------------------

import os
import sys
import logging

# Ensure the project root is in path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from src.cli.commands import main


if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception as e:
        logging.critical(f"Unhandled exception in main: {e}", exc_info=True)
        sys.exit(1)
