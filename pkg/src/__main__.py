# src/__main__.py
"""``python -m src``: the ohmcurve command line."""

import sys

from src.handlers.cli_handler import main

if __name__ == "__main__":
    sys.exit(main())
