#!/usr/bin/env python3
"""
Convenient script to run the fuzzy topology census from the project root.

This script allows running the census without installing the package.
"""

import sys
import os

sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from fuzzytop.cli.census import main


if __name__ == "__main__":
    sys.exit(main())
